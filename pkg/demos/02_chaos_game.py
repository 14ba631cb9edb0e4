"""
Chaos game representation of coding sequences
=============================================

Encode sequences as 2**k x 2**k k-mer grids, pair two genes into a
two-channel tensor, and contrast the combined signatures of two organisms.
"""

from pathlib import Path
import tempfile

import numpy as np

from grandcgr import combine_genome, encode, kmer_cell, normalize, stack_pair
from grandcgr.cgr import cell_to_kmer, diff_grids, render
from grandcgr.synthetic import toy_dataset

# each k-mer owns one cell; the last base picks the coarsest quadrant
for kmer in ("A", "GA", "ACGT"):
    print(kmer, "->", kmer_cell(kmer))
print("cell (12, 6) at k=4 holds", cell_to_kmer(12, 6, 4))

# counts over every sliding window; windows with ambiguity codes are skipped
grid = encode("ACGTNACGTACGT", 2)
print(grid.counts)
print("windows counted:", grid.counts.sum(), "skipped:", grid.skipped)

toy = toy_dataset(seed=2, n_host_families=6, n_pathogen_families=6, n_interactions=10, background_families=2)
genes = {r.id: r for r in toy.records}
a, b = toy.interactions[0].gene_a, toy.interactions[0].gene_b

# a sample for a pair model: both genes normalised into [0, 1], stacked as channels
pair = stack_pair(normalize(encode(genes[a].cds, 5)), normalize(encode(genes[b].cds, 5)), "positive")
print("paired tensor shape:", pair.to_array().shape)

# organism signatures: all CDS summed, then host minus pathogen
host = combine_genome([r.cds for r in toy.records if r.role == "host"], 4)
pathogen = combine_genome([r.cds for r in toy.records if r.role == "pathogen"], 4)
diff = diff_grids(host, pathogen)
y, x = np.unravel_index(np.argmax(diff.values), diff.values.shape)
print(f"most host-enriched 4-mer: {cell_to_kmer(x, y, 4)} ({diff.values[y, x]:+.3f})")

# 16-bit PGM images (dark = frequent) and a signed CSV for the difference
out = Path(tempfile.mkdtemp())
for path in render(host, out / "host.pgm") + render(diff, out / "host_minus_pathogen.pgm"):
    print("wrote", path)
