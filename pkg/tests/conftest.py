#!/usr/bin/env python3
"""
Shared test setup: src on the path and the hypothesis profile
"""

import sys
from pathlib import Path

from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

settings.register_profile("quorum", deadline=None, max_examples=100)
settings.load_profile("quorum")
