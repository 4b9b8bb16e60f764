"""
Training a Lenet slot machine on MNIST
======================================

A short greedy-selection run. Point SLOTMACHINES_MNIST at a directory
with the four IDX files; without it a synthetic stand-in is used so the
script still runs end to end.
"""
import os

import numpy as np

from slotmachines import data as dio
from slotmachines import trainer
from slotmachines.trainer import TrainConfig

MNIST = os.environ.get("SLOTMACHINES_MNIST", os.path.expanduser("~/data/mnist"))
EPOCHS = int(os.environ.get("DEMO_EPOCHS", 2))

############################################################
# Data: real MNIST when present, otherwise noisy class templates

if os.path.isdir(MNIST):
    raw = dio.load_mnist_dir(MNIST)
else:
    rng = np.random.default_rng(0)
    templates = rng.random((10, 1, 28, 28)).astype(np.float32)

    def fake(n):
        y = rng.integers(0, 10, n)
        x = 0.7 * templates[y] + 0.3 * rng.random((n, 1, 28, 28)).astype(np.float32)
        return dio.Dataset(x.astype(np.float32), y)

    raw = (fake(2000), fake(500))

############################################################
# K = 8 options, greedy selection, lr 0.2 with cosine restarts

config = TrainConfig(arch="lenet", mode="slot_gs", K=8, epochs=EPOCHS)
data = trainer.prepare_data(config, raw=raw)
model = trainer._build_for_config(config)
before = model.option_digest()
metrics, ckpt = trainer.train(config, data=data, model=model)

for row in metrics.rows:
    print(f"epoch {row['epoch']}: loss {row['train_loss']:.4f} val {row['val_acc']:.4f}")
print("test accuracy:", ckpt.test_acc)

############################################################
# The random values themselves never moved

print("options unchanged:", model.option_digest() == before)
