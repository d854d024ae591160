class DiskCylError(Exception):
    """Base class of every error raised by the diskcyl package.

    ``code`` is the short tag written into the ``error_code`` column of sweep tables.
    """
    code = 'error'


class InputError(DiskCylError, ValueError):
    code = 'input'


class DomainError(DiskCylError, ValueError):
    code = 'domain'


class PenetrationError(DiskCylError):
    """The bodies overlap (non-positive surface gap)."""
    code = 'penetration'


class DegenerateNormalError(DiskCylError):
    """The disk center lies on the cylinder axis, so no unilateral normal exists."""
    code = 'degenerate_normal'


class ParallelSingularityError(DomainError):
    """Option A needs the bilateral normal, which is undefined for parallel axes."""
    code = 'parallel_singularity'


class ProjectionSingularityError(DomainError):
    """Option B needs the unilateral normal projected onto the disk plane, which vanishes for sin(theta) = 0."""
    code = 'projection_singularity'


class InconsistentConfigurationError(DomainError):
    code = 'inconsistent_configuration'


class InvalidConfigurationError(DomainError):
    code = 'invalid_configuration'


class DivergentIntegralError(DomainError):
    code = 'divergent_integral'


class UnsupportedError(DiskCylError):
    code = 'unsupported'


class NumericError(DiskCylError, ArithmeticError):
    code = 'numeric'


class ConvergenceError(DiskCylError):
    code = 'convergence'


def with_location(error, location):
    """ Return a copy of ``error`` (same class) whose message names where it happened.

    :param error: (DiskCylError) Original error
    :param location: (String) e.g. 's1 = 0.25'
    :return: (DiskCylError) New error of the same type
    """
    return type(error)('{} (at {})'.format(error, location))
