"""Run every CLI command and validate its JSON output against docs/schemas."""
import json
import pathlib
import subprocess
import sys

from jsonschema import Draft202012Validator
from referencing import Registry, Resource

binary, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])

registry = Registry()
for path in schema_dir.glob("*.schema.json"):
    registry = registry.with_resource(path.name, Resource.from_contents(json.loads(path.read_text())))

runs = [
    ["bgg"], ["bgg", "--weight", "0,0"], ["bgg", "--g", "3", "--weight", "2,1,0"],
    ["slopes"], ["slopes", "--N", "0"], ["slopes", "--g", "3", "--deg", "6"],
    ["factor"], ["factor", "--h", "5/2"], ["family"], ["cech", "--rank", "3"],
    ["weights"], ["weights", "--p", "7", "--e", "2", "--t", "3,1"],
]
failures = 0
for args in runs:
    out = subprocess.run([binary, *args], capture_output=True, text=True, check=True).stdout
    doc = json.loads(out)
    schema = json.loads((schema_dir / f"{args[0]}.schema.json").read_text())
    errors = list(Draft202012Validator(schema, registry=registry).iter_errors(doc))
    for err in errors:
        print(f"{' '.join(args)}: {err.json_path}: {err.message}")
    failures += bool(errors)
    print(f"{'ok' if not errors else 'FAILED'}  {' '.join(args)}")
sys.exit(1 if failures else 0)
