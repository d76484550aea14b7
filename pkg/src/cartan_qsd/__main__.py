import sys

from cartan_qsd.cli import main

sys.exit(main())
