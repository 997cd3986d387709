"""
Corpus generation script
Writes every built-in scheme and fusion ring in its text format, plus the S3 Cayley table
"""
import os
import sys
from pathlib import Path
from typing import List

sys.path.insert(0, str(Path(__file__).parent.parent))

from cli.sources import format_entry, load_entry
from config import CORPUS, CORPUS_DIR, S3_CAYLEY_TABLE, get_data_directories


class CorpusGenerator:
    def __init__(self, output_dir: str = CORPUS_DIR):
        self.output_dir = output_dir
        get_data_directories()
        os.makedirs(self.output_dir, exist_ok=True)

    @staticmethod
    def filename(spec: str) -> str:
        """gen:hamming:3,2 -> hamming_3_2.txt"""
        stem = spec.split(":", 1)[1].replace(":", "_").replace(",", "_")
        return f"{stem}.txt"

    def save_to_file(self, text: str, filename: str) -> str:
        filepath = os.path.join(self.output_dir, filename)
        with open(filepath, "w") as f:
            f.write(text)
        print(f"Saved {filename} ({len(text.splitlines())} lines)")
        return filepath

    def generate_group_table(self) -> str:
        """The S3 Cayley table in group v1 format, usable as gen:group:<file>"""
        rows = [" ".join(str(v) for v in row) for row in S3_CAYLEY_TABLE]
        return self.save_to_file("group v1\n" + "\n".join(rows) + "\n", "s3_cayley.txt")

    def generate_all(self) -> List[str]:
        paths = []
        for kind, specs in CORPUS.items():
            print(f"Generating {kind}...")
            for spec in specs:
                paths.append(self.save_to_file(format_entry(load_entry(spec)), self.filename(spec)))
        paths.append(self.generate_group_table())
        print(f"Corpus generation completed! Files saved to {self.output_dir}")
        return paths


if __name__ == "__main__":
    output = sys.argv[1] if len(sys.argv) > 1 else CORPUS_DIR
    CorpusGenerator(output).generate_all()
