import time

__all__ = ["Budget"]


class Budget(object):
    '''
    Class represents the stopping rule of a search: a node cap and a wall-clock deadline.
    Calling it reports whether the search has to stop.
    '''
    def __init__(self, max_nodes=None, max_seconds=None):
        if max_nodes is not None and max_nodes < 0:
            raise ValueError("max_nodes must be non-negative")
        if max_seconds is not None and max_seconds < 0:
            raise ValueError("max_seconds must be non-negative")
        self._nodes = max_nodes
        self._seconds = max_seconds
        self._deadline = None

    @classmethod
    def from_settings(cls, settings):
        return cls(settings.max_nodes, settings.max_seconds)

    @property
    def unlimited(self):
        return self._nodes is None and self._seconds is None

    def start(self, deadline=None):
        '''
        Arm the clock; an explicit absolute deadline lets several subtrees share one
        '''
        if deadline is not None:
            self._deadline = deadline
        elif self._seconds is not None:
            self._deadline = time.monotonic() + self._seconds
        else:
            self._deadline = None
        return self._deadline

    def __call__(self, num_nodes):
        if self._nodes is not None and num_nodes >= self._nodes:
            return True
        if self._deadline is not None and time.monotonic() >= self._deadline:
            return True
        return False

    def __repr__(self):
        return "Budget(max_nodes={}, max_seconds={})".format(self._nodes, self._seconds)
