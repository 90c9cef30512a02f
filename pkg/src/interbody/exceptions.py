"""Exception hierarchy for interbody."""


class InterbodyError(ValueError):
    pass


class DegenerateInput(InterbodyError):
    pass


class InvalidCombinatorics(InterbodyError):
    pass


class EmptySection(InterbodyError):
    pass


class ZeroDirection(InterbodyError):
    pass


class OnWall(InterbodyError):
    def __init__(self, vertex_index):
        super().__init__(f"direction lies on the hyperplane of vertex {vertex_index}")
        self.vertex_index = vertex_index


class OnHyperplane(InterbodyError):
    def __init__(self, index):
        super().__init__(f"translation lies on affine hyperplane {index}")
        self.index = index


class DivisibilityFailure(InterbodyError):
    """Numerator of a radial piece is not divisible by the squared norm.

    Never expected on valid input; signals an internal bug.
    """


class ChamberMismatch(InterbodyError):
    pass


class DegreeExceeded(InterbodyError):
    pass


class ParallelEdges(InterbodyError):
    pass


class NotSymmetric(InterbodyError):
    pass


class NotABox(InterbodyError):
    pass
