"""
From matched pairs to a stored training set
===========================================

Draw negatives, split the pairs, add synonymous-codon replicates to the
training split, probe the labels for species bias, and save CGR tensors in
the CGRT binary format.
"""

from pathlib import Path
import tempfile

from grandcgr import (
    augment_pairs,
    bias_report,
    build_graph,
    encode,
    generate_negatives,
    grand_reduce,
    greedy_cluster,
    normalize,
    read_cgrt,
    realize_positives,
    split_dataset,
    stack_pair,
    write_cgrt,
)
from grandcgr.dataset import negative_pool
from grandcgr.sequence import translate_cds
from grandcgr.tensorio import sample_from_pair
from grandcgr.synthetic import toy_dataset

toy = toy_dataset(seed=3, n_host_families=12, n_pathogen_families=16, n_interactions=60,
                  codons=(40, 90), background_families=10)
genes = {r.id: r for r in toy.records}
clusters = greedy_cluster(toy.records, 0.8)
graph = build_graph(toy.interactions, clusters)
matching = grand_reduce(graph, seed=0)
positives = realize_positives(matching, graph, seed=0)

# negatives pair clusters GRAND left unmatched and that share no known interaction
pool = negative_pool(matching, graph)
negatives = generate_negatives(pool, clusters, toy.interactions, len(positives), seed=0,
                               stratify=True, records=genes)
pairs = positives + negatives
print(f"{len(positives)} positives, {len(negatives)} negatives")

# stratified by label, reproducible from the seed
split = split_dataset(pairs, (0.6, 0.2, 0.2), seed=0)
print({name: len(ids) for name, ids in split.splits.items()})

# synonymous codon swaps change the DNA, never the protein
train = [p for p in pairs if p.pair_id in set(split.splits["train"])]
augmented, skipped = augment_pairs(train, genes, n_per_pair=2, seed=0)
first = augmented[0]
print(first.ids, "protein unchanged:", translate_cds(first.cds_a) == translate_cds(genes[first.gene_a].cds))

# can organism identity alone predict the label?
report = bias_report(pairs, genes, split)
print(f"species-only kNN accuracy {report['accuracy']:.3f}, warn={report['warn']}")

# two-channel tensors for the test split, written and read back
samples = []
for p in pairs:
    if p.pair_id in set(split.splits["test"]):
        t = stack_pair(normalize(encode(genes[p.gene_a].cds, 4)), normalize(encode(genes[p.gene_b].cds, 4)), p.label)
        samples.append(sample_from_pair(p.pair_id, t))
path = Path(tempfile.mkdtemp()) / "test.cgrt"
size = write_cgrt(samples, path)
back = read_cgrt(path)
print(f"{path.name}: {size} bytes, {len(back)} samples, k={back.k}, channels={back.channels}")
