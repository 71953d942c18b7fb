import os
import shutil
import sys


def _stage_package(tmp_root):
    """Assemble an importable normff package from the source tree plus the
    compiled module, whose build directory comes in via NORMFF_PYMOD_DIR."""
    src_pkg = os.path.join(os.path.dirname(__file__), "..", "..", "python", "normff")
    mod_dir = os.environ.get("NORMFF_PYMOD_DIR")
    if not mod_dir:
        return
    pkg = os.path.join(tmp_root, "normff")
    os.makedirs(pkg, exist_ok=True)
    shutil.copy(os.path.join(src_pkg, "__init__.py"), pkg)
    for name in os.listdir(mod_dir):
        if name.startswith("_core") and name.endswith(".so"):
            shutil.copy(os.path.join(mod_dir, name), pkg)
    sys.path.insert(0, tmp_root)


_stage_root = os.path.join(os.path.dirname(__file__), ".staged_pkg")
_stage_package(_stage_root)
