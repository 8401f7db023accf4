__all__ = ["InputError", "ParseError", "DomainError", "SizeError", "ConsistencyError"]


class InputError(ValueError):
    '''
    Class represents invalid arguments passed to any coexpy operation
    '''


class ParseError(InputError):
    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = "line {}: {}".format(lineno, message)
        super().__init__(message)


class DomainError(InputError):
    pass


class SizeError(RuntimeError):
    '''
    Raised when an exact computation would need more terms than the budget allows
    '''
    def __init__(self, terms, budget, what="exact integral"):
        self.terms = terms
        self.budget = budget
        super().__init__("{} needs {} terms, budget is {}".format(what, terms, budget))


class ConsistencyError(AssertionError):
    pass
