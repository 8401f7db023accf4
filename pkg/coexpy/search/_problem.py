from dataclasses import dataclass, field

from ..config import DEFAULT_SETTINGS
from ..errors import InputError
from ._objective import make_objective

__all__ = ["SearchProblem", "SearchResult"]


@dataclass(frozen=True)
class SearchProblem:
    '''
    Maximise the objective selected by mode over the family-free k-graphs on n vertices
    '''
    n: int
    k: int
    l: int
    family: tuple = ()
    mode: str = "positive"
    settings: object = DEFAULT_SETTINGS

    def __post_init__(self):
        object.__setattr__(self, "family", tuple(self.family))
        if self.k < 1 or self.n < 0:
            raise InputError("need k >= 1 and n >= 0, got n={}, k={}".format(self.n, self.k))
        if not 0 <= self.l <= self.k - 1:
            raise InputError("l must lie in 0..{}, got {}".format(self.k - 1, self.l))
        for F in self.family:
            if F.k != self.k:
                raise InputError("family member has uniformity {}, expected {}".format(F.k, self.k))
        make_objective(self.mode, self.l)

    @property
    def objective(self):
        return make_objective(self.mode, self.l)


@dataclass
class SearchResult:
    value: int
    witnesses: list = field(default_factory=list)
    nodes: int = 0
    prunes: int = 0
    seconds: float = 0.
    exact: bool = True

    @property
    def stats(self):
        return {"nodes": self.nodes, "prunes": self.prunes, "seconds": self.seconds}

    def as_dict(self):
        # wall time stays out so that reruns serialise identically
        return {"value": self.value, "exact": self.exact,
                "stats": {"nodes": self.nodes, "prunes": self.prunes}}
