"""Library-wide error type.

DomainError marks violated mathematical preconditions (degenerate input,
undefined operation); the CLI maps it to exit code 2. Plain asserts guard
internal identities that are supposed to be unconditionally true.
"""


class DomainError(ValueError):
    pass
