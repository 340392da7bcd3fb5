import os
import sys

# Under ctest the freshly built module is staged on PYTHONPATH; an editable
# install's redirecting finder would otherwise take precedence over it.
if os.environ.get("RKMATCH_EXPECT_DIR"):
    sys.meta_path[:] = [
        f for f in sys.meta_path if not type(f).__module__.startswith("_editable_skbc_")
    ]
    sys.modules.pop("rkmatch", None)
