"""Error type shared by all modules.

Every failure carries a short machine-readable code such as
``DIMENSION_MISMATCH`` so callers (and the CLI) can branch on it.
"""


class HRError(ValueError):
    def __init__(self, code, message=""):
        self.code = code
        self.message = message
        super().__init__(f"{code}: {message}" if message else code)
