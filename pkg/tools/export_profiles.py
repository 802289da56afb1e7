"""
Intensity Efficiency - Reference Profile Exporter
Regenerates the sample profile documents under profiles/.
"""

import sys
import os
from pathlib import Path

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from src.core.constants import IDENTICAL_ORDER_RANKINGS, PROFILE_DIR
from src.formats.documents import save_profile
from src.model.profile import Profile
from src.verify.counterexample import build_counterexample_profile


def export_profiles(out_dir: str = PROFILE_DIR):
    identical = Profile.from_rankings(IDENTICAL_ORDER_RANKINGS, 3)
    save_profile(identical, os.path.join(out_dir, "identical_order.json"))
    print(f"Wrote {out_dir}/identical_order.json")

    # Agents 4 and 5 use the default completions
    save_profile(build_counterexample_profile(), os.path.join(out_dir, "five_agent_default.json"))
    print(f"Wrote {out_dir}/five_agent_default.json")


if __name__ == "__main__":
    export_profiles(sys.argv[1] if len(sys.argv) > 1 else PROFILE_DIR)
