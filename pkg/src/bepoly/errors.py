"""Exception hierarchy shared by all bepoly modules."""


class BepolyError(Exception):
    """Base class for every error raised by this package."""


class PoleError(BepolyError, ZeroDivisionError):
    """A value was requested at a point where a denominator vanishes."""


class UnknownIdentity(BepolyError, KeyError):
    def __str__(self):
        return "unknown identity: %s" % (self.args[0] if self.args else "?")


class IndexOutOfDomain(BepolyError, ValueError):
    pass


class LengthError(BepolyError, ValueError):
    """A coefficient sequence is too short for the requested index."""


class DSLError(BepolyError):
    pass


class ParseError(DSLError):
    def __init__(self, message, line=1, column=1, expected=()):
        self.message = message
        self.line = line
        self.column = column
        self.expected = tuple(sorted(set(expected)))
        text = "%d:%d: %s" % (line, column, message)
        if self.expected:
            text += " (expected one of: %s)" % ", ".join(self.expected)
        super().__init__(text)


class UnboundIndex(DSLError):
    pass


class NonIntegerIndex(DSLError):
    pass


class DivisionByZeroPolynomial(DSLError, ZeroDivisionError):
    pass
