class PolyvolError(Exception):
    """Base error; carries a machine-readable code and a CLI exit code"""

    code = 'INTERNAL_ERROR'
    exit_code = 1

    def __init__(self, message):
        super().__init__(message)
        self.message = message

    def to_dict(self):
        return {
            'success': False,
            'error': {
                'code': self.code,
                'message': self.message
            }
        }


class DomainError(PolyvolError, ValueError):
    """Input outside the domain of an operation"""
    code = 'DOMAIN_ERROR'
    exit_code = 2


class ExactModeError(DomainError):
    """Exact arithmetic requested for inputs that are not rational multiples of pi"""
    code = 'EXACT_MODE_UNAVAILABLE'


class ToleranceError(PolyvolError):
    """Requested tolerance needs more series terms than the configured cap"""
    code = 'TOLERANCE_UNREACHABLE'
    exit_code = 2
