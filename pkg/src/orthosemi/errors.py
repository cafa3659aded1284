"""Exception hierarchy shared by every module of the package."""


class SemigroupError(Exception):
    """Base class for all errors raised by orthosemi."""


class InvalidEntry(SemigroupError):
    pass


class NotAssociative(SemigroupError):
    def __init__(self, triple, left, right):
        self.triple = triple
        self.left = left
        self.right = right
        a, b, c = triple
        super().__init__(
            f"({a}*{b})*{c} = {left} but {a}*({b}*{c}) = {right}")


class SizeZero(SemigroupError):
    pass


class TooLarge(SemigroupError):
    pass


class NotOrthodox(SemigroupError):
    pass


class NotABand(SemigroupError):
    pass


class NotACongruence(SemigroupError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"compatibility fails at {witness}")


class KernelNotCompletelySimple(SemigroupError):
    pass


class NotNongroup(SemigroupError):
    pass


class NotAnInverse(SemigroupError):
    pass


class NotCanonical(SemigroupError):
    pass


class EmptyWord(SemigroupError):
    pass


class NotPartialHom(SemigroupError):
    def __init__(self, pair):
        self.pair = pair
        super().__init__(f"partial homomorphism law fails at {pair}")


class UnknownSuite(SemigroupError):
    pass
