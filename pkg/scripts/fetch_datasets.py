"""Download the real-world edge lists named in the dataset manifest.

Files land in $TIEENTROPY_DATA (default ./data). Usage:

    python scripts/fetch_datasets.py [NAME ...]
"""

import sys

from tieentropy import io


def main(names):
    manifest = io.load_manifest()
    for name in names or manifest:
        if io.dataset_path(name, manifest):
            print(f"{name}: already present")
            continue
        path = io.fetch_dataset(name, manifest)
        g, _ = io.load_edge_list(path, manifest[name].fmt)
        ok = io.check_counts(g, manifest[name])
        print(f"{name}: nodes={g.node_count} edges={g.edge_count} matches_manifest={int(ok)}")


if __name__ == "__main__":
    main(sys.argv[1:])
