import sys

from cfgeo.cli import main

sys.exit(main())
