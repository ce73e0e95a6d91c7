# Copyright (c) 2024 by Jonathan AW
# cli/__main__.py

import sys

from cli import main

sys.exit(main())
