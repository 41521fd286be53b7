import sys

from addcirc.main import main

sys.exit(main())
