"""
* Nom de l'application : TraceSampler SGI-TS
 * Description : Error handlers implementation
"""

import logging
import sys
from functools import wraps

from utils.errors import SamplingError, USAGE_ERRORS
from utils.i18n import get_text

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_RUNTIME = 1
EXIT_USAGE = 2


def exit_code_for(error):
    if isinstance(error, USAGE_ERRORS):
        return EXIT_USAGE
    return EXIT_RUNTIME


def handle_errors(f):
    """Turns a command's exceptions into the stable exit-code contract."""
    @wraps(f)
    def decorated_function(args, cfg):
        try:
            result = f(args, cfg)
            return EXIT_OK if result is None else result
        except SamplingError as e:
            code = exit_code_for(e)
            logger.error("%s failed: %s", f.__name__, e)
            print(f"{get_text('cli.error', cfg.LANGUAGE)} [{e.code}]: {e}", file=sys.stderr)
            return code
        except OSError as e:
            logger.error("%s failed: %s", f.__name__, e)
            print(f"{get_text('cli.error', cfg.LANGUAGE)} [IO_ERROR]: {e}", file=sys.stderr)
            return EXIT_RUNTIME
    return decorated_function
