"""Exception hierarchy shared by every module."""


class TransformAlgebraError(Exception):
    """Base class for all errors raised by :mod:`sctransforms`."""


class NonUnitGenerator(TransformAlgebraError, ValueError):
    def __init__(self, n, generator):
        super().__init__(f"generator {generator} is not a unit modulo {n}")
        self.n = n
        self.generator = generator


class IndexOutOfRange(TransformAlgebraError, IndexError):
    pass


class DimensionMismatch(TransformAlgebraError, ValueError):
    pass


class ModulusMismatch(TransformAlgebraError, ValueError):
    pass


class EvenModulus(TransformAlgebraError, ValueError):
    pass


class NotInAlgebra(TransformAlgebraError):
    """The matrix is not diagonalized by the transform.

    ``residual`` is the largest off-diagonal magnitude left after
    conjugation.
    """

    def __init__(self, residual, tol):
        super().__init__(
            f"matrix is not in the algebra: off-diagonal residual {residual:.3e} > tol {tol:.3e}"
        )
        self.residual = float(residual)
        self.tol = float(tol)


class SingularElement(TransformAlgebraError):
    def __init__(self, indices, singular_tol):
        indices = [int(i) for i in indices]
        super().__init__(
            f"element is singular: |eigenvalue| <= {singular_tol:g} at indices {indices}"
        )
        self.indices = indices
        self.singular_tol = singular_tol


class SingularConversion(TransformAlgebraError):
    pass
