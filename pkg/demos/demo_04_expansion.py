"""
A slot machine is a pruned bigger network
=========================================

Each connection can be rewritten as K identity units, one per option.
Keeping only the path of the top-score option gives back exactly the
slot machine's output.
"""
import numpy as np

from slotmachines import analysis
from slotmachines.models import build_model

for arch in ("lenet", "conv2"):
    model = build_model(arch, "slot_gs", K=2, rng=np.random.default_rng(0))
    x = np.random.default_rng(1).uniform(-1, 1, (2,) + model.in_shape)
    expanded, keep = analysis.expand_to_pruned_network(model)
    dummy = sum(e.n_dummy_units for e in expanded.expanded_layers())
    kept = sum(int(k.sum()) for k in keep)
    print(f"{arch}: {model.n_connections()} connections -> {dummy} dummy units, "
          f"{kept} kept paths, max diff {analysis.expansion_max_diff(model, x):.2e}")
