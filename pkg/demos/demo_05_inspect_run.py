"""
Looking inside a finished run
=============================

Reads a checkpoint written by the trainer and dumps histograms of the
selected weights and their scores, then compares how often selections
changed in two runs.

    python demos/demo_05_inspect_run.py runs/gs_k8 runs/ps_k8
"""
import os
import sys

from slotmachines import analysis, trainer
from slotmachines.trainer import Checkpoint, MetricsLog

run_dirs = sys.argv[1:] or ["runs/gs_k8", "runs/ps_k8"]

############################################################
# Selected-weight histograms at init and at the best epoch

ckpt = Checkpoint.load(os.path.join(run_dirs[0], "checkpoint.npz"))
init = trainer._build_for_config(ckpt.train_config)
best = trainer.best_model(ckpt)
for label, model in (("init", init), ("best", best)):
    print(label, "mean |selected w| =", round(analysis.mean_abs_selected(model), 6))
    layer = model.slot_layers()[0]
    h = analysis.selected_weight_histogram(layer, 0, "linear0", bins=8)
    print("  first layer, 8 bins:", h.counts.tolist())

############################################################
# How much each run keeps changing its mind late in training

logs = {os.path.basename(d): MetricsLog.from_csv(os.path.join(d, "metrics.csv"))
        for d in run_dirs if os.path.exists(os.path.join(d, "metrics.csv"))}
for name, m in logs.items():
    print(name, "mean changed fraction, epochs 100-200:",
          analysis.mean_changed_fraction(m, 100, 200))
analysis.write_exploration_csv("exploration.csv", logs)
