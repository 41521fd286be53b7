import sys

from fusion_engine_client.utils.trace import *

TRACE = getTraceLevel(depth=1)

_VERBOSE_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def configure_console_logging(verbose: int = 0, stream=sys.stderr):
    """!
    @brief Configure console logging for the command-line tools.

    Log output is sent to stderr by default since stdout carries circuit files and matrix printouts.

    @param verbose The number of times `-v` was specified.
    @param stream The output stream.
    """
    if verbose == 0:
        basicConfig(level=INFO, format='%(message)s', stream=stream)
    else:
        basicConfig(level=INFO, format=_VERBOSE_FORMAT, stream=stream)
        if verbose == 1:
            getLogger('addcirc').setLevel(DEBUG)
        elif verbose == 2:
            getLogger('addcirc').setLevel(TRACE)
        else:
            Logger.root.setLevel(DEBUG)
            getLogger('addcirc').setLevel(TRACE - 1)
