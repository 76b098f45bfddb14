#!/usr/bin/env python3
"""Regenerate src/rave/isa/pvcodes.py from the decode tables.

Vector and vsetvl mnemonics get stable visualization codes assigned from 10
upward in lexicographic order, one table per decoder version. Code 1 is
shared by all scalar instructions. Re-running this tool must be a no-op
unless the decode tables changed; tests enforce that.
"""

from __future__ import annotations

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from rave.isa import SpecVersion
from rave.isa.decode import all_mnemonics  # noqa: E402

HEADER = '''"""Frozen visualization codes for every vector and vsetvl mnemonic.

Generated by tools/gen_pvcodes.py; do not edit by hand. Codes start at 10,
assigned in lexicographic mnemonic order per decoder version, so trace files
stay comparable across runs. All scalar instructions share SCALAR_CODE.
"""

SCALAR_CODE = 1
FIRST_MNEMONIC_CODE = 10

PV_CODES: dict[str, dict[str, int]] = {
'''


def render() -> str:
    out = [HEADER]
    for spec in (SpecVersion.V0_7_1, SpecVersion.V1_0):
        out.append(f'    "{spec.value}": {{\n')
        for i, name in enumerate(sorted(all_mnemonics(spec))):
            out.append(f'        "{name}": {10 + i},\n')
        out.append("    },\n")
    out.append("}\n")
    return "".join(out)


def main() -> None:
    target = pathlib.Path(__file__).resolve().parent.parent / "src/rave/isa/pvcodes.py"
    text = render()
    if target.exists() and target.read_text() == text:
        print(f"{target} already current")
        return
    target.write_text(text)
    print(f"wrote {target}")


if __name__ == "__main__":
    main()
