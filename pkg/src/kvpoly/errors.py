"""Exception hierarchy for kvpoly."""


class KVPolyError(Exception):
    """Base class for every error raised by kvpoly."""


class DiagramError(KVPolyError):
    """A diagram file could not be turned into a valid diagram."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        self.detail = message
        super().__init__(f"line {line}: {message}" if line is not None else message)


class DiagramSyntaxError(DiagramError):
    """A line of a .kvg file does not match the grammar."""


class LabelError(DiagramError):
    """An edge label does not occur exactly twice."""

    def __init__(self, label: int, count: int, line: int | None = None):
        self.label = label
        self.count = count
        super().__init__(f"edge label {label} occurs {count} time(s), expected exactly 2", line)


class GenusError(DiagramError):
    """The rotation system does not describe a planar diagram."""

    def __init__(self, component: int, euler: int, line: int | None = None):
        self.component = component
        self.euler = euler
        super().__init__(f"component {component} has Euler characteristic {euler}, expected 2", line)


class SiteMismatch(KVPolyError):
    """A move was requested at a site that does not have the required shape."""

    def __init__(self, move: str, reason: str):
        self.move = move
        self.reason = reason
        super().__init__(f"{move}: {reason}")


class RuleMismatch(KVPolyError):
    """A located reduction no longer matches the diagram it is applied to."""

    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(f"reduction does not match diagram: {reason}")


class NoVertexNoCircle(KVPolyError):
    """The diagram has nothing left to reduce."""

    def __init__(self) -> None:
        super().__init__("diagram has neither vertices nor removable circles")


class ReductionError(KVPolyError):
    """The planar reduction strategy failed to make progress."""

    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(f"planar reduction failed: {reason}")


class NonExactSpecialization(KVPolyError):
    """A specialization left a denominator that does not divide the numerator."""

    def __init__(self, spec: str):
        self.spec = spec
        super().__init__(f"specialization {spec!r} is not an exact Laurent polynomial")


class PoleAtPoint(KVPolyError):
    """Numeric evaluation hit a zero of the denominator or a zero variable."""

    def __init__(self, point: object):
        self.point = point
        super().__init__(f"value has a pole at {point}")


class DepthExceeded(KVPolyError):
    """An oracle was asked to evaluate a diagram beyond its configured bound."""

    def __init__(self, kind: str, size: int, bound: int):
        self.kind = kind
        self.size = size
        self.bound = bound
        super().__init__(f"{kind} oracle bound exceeded: {size} > {bound}")


class UnknownConstant(KVPolyError):
    """A rule table weight references a name the ring does not define."""

    def __init__(self, name: str):
        self.name = name
        super().__init__(f"unknown constant in weight expression: {name}")
