#!/usr/bin/env python3
"""Fetch and convert the MULAN reference datasets (flags, emotions, yeast).

The evaluation suite expects, under the data directory:

    <name>_train.csv   features then label columns, comma separated
    <name>_test.csv
    <name>.manifest    single line: label_count=<int>

Usage:

    # try to download from the known mirrors, then convert
    python3 scripts/fetch_datasets.py --out data

    # convert ARFF files you downloaded yourself (works offline)
    python3 scripts/fetch_datasets.py --out data \
        --convert emotions-train.arff emotions-test.arff \
        --name emotions --labels 6

MULAN hosts the archives at https://mulan.sourceforge.net/datasets-mlc.html;
for these three datasets the labels are the trailing attributes of each ARFF.
"""

import argparse
import bz2
import gzip
import io
import re
import sys
import urllib.request
import zipfile
from pathlib import Path

DATASETS = {
    "flags": {"labels": 7},
    "emotions": {"labels": 6},
    "yeast": {"labels": 14},
}

# best-effort mirror list; entries are (train_url, test_url) of raw or
# compressed ARFF files
MIRRORS = {
    name: [
        (
            f"https://downloads.sourceforge.net/project/mulan/datasets/{name}-train.arff",
            f"https://downloads.sourceforge.net/project/mulan/datasets/{name}-test.arff",
        ),
        (
            f"https://raw.githubusercontent.com/tsoumakas/mulan/master/data/multi-label/{name}/{name}-train.arff",
            f"https://raw.githubusercontent.com/tsoumakas/mulan/master/data/multi-label/{name}/{name}-test.arff",
        ),
    ]
    for name in DATASETS
}


def decompress(payload: bytes, url: str) -> bytes:
    if url.endswith(".bz2"):
        return bz2.decompress(payload)
    if url.endswith(".gz"):
        return gzip.decompress(payload)
    if url.endswith(".zip"):
        with zipfile.ZipFile(io.BytesIO(payload)) as zf:
            names = [n for n in zf.namelist() if n.endswith(".arff")]
            if len(names) != 1:
                raise ValueError(f"expected one .arff inside {url}")
            return zf.read(names[0])
    if url.endswith(".rar"):
        raise ValueError("rar archives are not supported; unpack manually")
    return payload


def parse_arff(text: str):
    """Returns (attribute_names, rows) for dense or sparse ARFF data.

    Nominal attributes are encoded as the index of the value in their
    declared value set, except {0,1}-style numeric nominals, which keep
    their literal value (MULAN encodes labels that way).
    """
    attributes = []
    nominal_maps = []  # per attribute: None (numeric) or value -> float
    rows = []
    in_data = False
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("%"):
            continue
        low = line.lower()
        if not in_data:
            if low.startswith("@attribute"):
                m = re.match(
                    r"@attribute\s+('[^']*'|\"[^\"]*\"|\S+)\s+(.*)$", line,
                    re.IGNORECASE)
                if not m:
                    raise ValueError(f"unparsable attribute line: {line}")
                attributes.append(m.group(1).strip("'\""))
                domain = m.group(2).strip()
                if domain.startswith("{"):
                    values = [v.strip().strip("'\"")
                              for v in domain.strip("{}").split(",")]
                    try:
                        mapping = {v: float(v) for v in values}
                    except ValueError:
                        mapping = {v: float(i) for i, v in enumerate(values)}
                    nominal_maps.append(mapping)
                else:
                    nominal_maps.append(None)
            elif low.startswith("@data"):
                in_data = True
            continue

        def decode(cell: str, attr_idx: int) -> float:
            cell = cell.strip().strip("'\"")
            mapping = nominal_maps[attr_idx]
            if mapping is not None:
                if cell not in mapping:
                    raise ValueError(
                        f"value '{cell}' not in the nominal domain of "
                        f"attribute {attributes[attr_idx]}")
                return mapping[cell]
            return float(cell)

        values = [0.0] * len(attributes)
        if line.startswith("{"):
            # sparse: {index value, index value, ...}
            body = line.strip("{}").strip()
            if body:
                for pair in body.split(","):
                    idx, val = pair.split(None, 1)
                    values[int(idx)] = decode(val, int(idx))
        else:
            cells = line.split(",")
            if len(cells) != len(attributes):
                raise ValueError(
                    f"row has {len(cells)} cells, expected {len(attributes)}")
            values = [decode(c, i) for i, c in enumerate(cells)]
        rows.append(values)
    if not attributes or not rows:
        raise ValueError("no attributes or no data rows found")
    return attributes, rows


def parse_label_xml(text: str):
    """Label attribute names from a MULAN labels XML file."""
    names = re.findall(r"<label\s+name\s*=\s*\"([^\"]+)\"", text)
    if not names:
        raise ValueError("no <label name=...> entries found in the XML")
    return names


def reorder_labels_last(attributes, rows, label_names):
    """Moves the named label attributes to the end, keeping their XML
    order; feature attributes keep their relative order."""
    name_to_idx = {name: i for i, name in enumerate(attributes)}
    missing = [n for n in label_names if n not in name_to_idx]
    if missing:
        raise ValueError(f"label attributes not in ARFF: {missing}")
    label_idx = [name_to_idx[n] for n in label_names]
    label_set = set(label_idx)
    feature_idx = [i for i in range(len(attributes)) if i not in label_set]
    order = feature_idx + label_idx
    return ([attributes[i] for i in order],
            [[row[i] for i in order] for row in rows])


def write_csv(rows, labels: int, path: Path):
    with open(path, "w", encoding="utf-8") as out:
        for row in rows:
            feats = row[:-labels]
            labs = row[-labels:]
            for v in labs:
                if v not in (0.0, 1.0):
                    raise ValueError(f"non-binary label value {v}")
            cells = [repr(v) for v in feats] + [str(int(v)) for v in labs]
            out.write(",".join(cells) + "\n")


def convert(train_arff: str, test_arff: str, name: str, labels: int,
            out_dir: Path, label_xml: str = None):
    attrs_train, rows_train = parse_arff(train_arff)
    attrs_test, rows_test = parse_arff(test_arff)
    if len(attrs_train) != len(attrs_test):
        raise ValueError("train/test attribute counts differ")
    if label_xml:
        label_names = parse_label_xml(label_xml)
        attrs_train, rows_train = reorder_labels_last(attrs_train, rows_train,
                                                      label_names)
        attrs_test, rows_test = reorder_labels_last(attrs_test, rows_test,
                                                    label_names)
        labels = len(label_names)
    if labels >= len(attrs_train):
        raise ValueError("label count exceeds attribute count")
    out_dir.mkdir(parents=True, exist_ok=True)
    write_csv(rows_train, labels, out_dir / f"{name}_train.csv")
    write_csv(rows_test, labels, out_dir / f"{name}_test.csv")
    (out_dir / f"{name}.manifest").write_text(f"label_count={labels}\n")
    print(f"{name}: {len(rows_train)} train / {len(rows_test)} test rows, "
          f"{len(attrs_train) - labels} features, {labels} labels")


def fetch(url: str) -> bytes:
    req = urllib.request.Request(url, headers={"User-Agent": "curl/8"})
    with urllib.request.urlopen(req, timeout=60) as resp:
        return resp.read()


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--out", default="data", help="output directory")
    ap.add_argument("--only", help="comma-separated subset of dataset names")
    ap.add_argument("--convert", nargs=2, metavar=("TRAIN_ARFF", "TEST_ARFF"),
                    help="convert local ARFF files instead of downloading")
    ap.add_argument("--name", help="dataset name for --convert")
    ap.add_argument("--labels", type=int,
                    help="label count for --convert (default: by name)")
    ap.add_argument("--xml",
                    help="MULAN labels XML; label attributes are looked up "
                         "by name instead of assuming they come last")
    args = ap.parse_args()
    out_dir = Path(args.out)

    if args.convert:
        if not args.name:
            ap.error("--convert requires --name")
        labels = args.labels or DATASETS.get(args.name, {}).get("labels")
        if not labels and not args.xml:
            ap.error("--convert requires --labels or --xml for unknown "
                     "dataset names")
        convert(Path(args.convert[0]).read_text(),
                Path(args.convert[1]).read_text(), args.name, labels or 0,
                out_dir,
                Path(args.xml).read_text() if args.xml else None)
        return 0

    wanted = (args.only.split(",") if args.only else list(DATASETS))
    failures = []
    for name in wanted:
        labels = DATASETS[name]["labels"]
        done = False
        for train_url, test_url in MIRRORS[name]:
            try:
                train = decompress(fetch(train_url), train_url)
                test = decompress(fetch(test_url), test_url)
                convert(train.decode("utf-8", errors="replace"),
                        test.decode("utf-8", errors="replace"), name, labels,
                        out_dir)
                done = True
                break
            except Exception as exc:  # try the next mirror
                print(f"{name}: {train_url} failed ({exc})", file=sys.stderr)
        if not done:
            failures.append(name)

    if failures:
        print(
            f"\ncould not fetch: {', '.join(failures)}.\n"
            "Download the archives from "
            "https://mulan.sourceforge.net/datasets-mlc.html, unpack them, "
            "and convert offline, e.g.:\n"
            "  python3 scripts/fetch_datasets.py --out data "
            "--convert emotions-train.arff emotions-test.arff "
            "--name emotions --labels 6",
            file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
