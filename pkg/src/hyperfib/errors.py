"""Error taxonomy shared across the pipeline.

ValidationError covers rejected or unsupported input (CLI exit code 2);
InternalConsistencyError covers broken internal invariants that should never
survive to the user (CLI exit code 3).
"""


class HyperfibError(Exception):
    pass


class ValidationError(HyperfibError):
    pass


class InternalConsistencyError(HyperfibError):
    pass
