"""Write DOT files for the Plott lattice on three elements, the prefix order on
simple words, and two piece posets."""
import argparse
from pathlib import Path

from plott import WordSet, all_words, enumerate_plott
from plott.catalog import ABC, five_piece_function, two_extremes
from plott.dot import export_dot
from plott.geometry import pieces


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", type=Path, default=Path("figures"))
    args = parser.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    outputs = {
        "plott_lattice_n3.dot": export_dot(list(enumerate_plott(ABC))),
        "word_prefix_order_n3.dot": export_dot(WordSet.of(ABC, all_words(ABC))),
        "pieces_two_extremes.dot": export_dot(pieces(two_extremes()).order),
        "pieces_five_piece.dot": export_dot(pieces(five_piece_function()).order),
    }
    for name, text in outputs.items():
        path = args.out / name
        path.write_text(text, encoding="utf-8")
        edges = sum(1 for line in text.splitlines() if "->" in line)
        nodes = sum(1 for line in text.splitlines() if "[label=" in line)
        print(f"{path}: {nodes} nodes, {edges} edges")


if __name__ == "__main__":
    main()
