"""Running the command-line tool on a data file.

Writes a small incidence matrix (units by types) to CSV, then calls the
`multifiedler` entry point in-process. The same calls work from a shell.
"""
import json
import tempfile
from pathlib import Path

from multifiedler import gen_cycle
from multifiedler.cli import main
from multifiedler.io import write_data_matrix

with tempfile.TemporaryDirectory() as tmp:
    data = Path(tmp) / "cycle6.csv"
    write_data_matrix(gen_cycle(6), data, header=[f"type{j + 1}" for j in range(6)])

    out = Path(tmp) / "result.json"
    status = main(["seriate", "--input", str(data), "--format", "json", "--out", str(out)])
    doc = json.loads(out.read_text())
    print("exit status", status)
    print({k: doc[k] for k in ("multiplicity", "method", "count", "fiedler_value")})
    print("first orderings:", doc["permutations"][:3])

    print("\nmultifiedler lines --input cycle6.csv --points 2 (first lines):")
    main(["lines", "--input", str(data), "--points", "2", "--out", str(Path(tmp) / "lines.csv")])
    print("".join((Path(tmp) / "lines.csv").read_text().splitlines(keepends=True)[:8]))
