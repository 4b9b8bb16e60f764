"""
One slot layer by hand
======================

Every connection gets K frozen random values and K trainable scores.
The forward pass picks one value per connection; only the scores learn.
"""
import numpy as np

from slotmachines import slots

rng = np.random.default_rng(0)

############################################################
# A 3 -> 4 linear layer with K = 4 options per connection

layer = slots.init_slot_layer("linear", (3, 4), K=4, rng=rng)
print("sigma:", round(layer.sigma, 4))
print("options of connection (0, 0):", layer.options[0, 0])
print("scores  of connection (0, 0):", layer.scores[0, 0])

############################################################
# Greedy selection takes the top score; sampling draws from the softmax

gs = slots.select_gs(layer.scores)
ps = slots.select_ps(layer.scores, rng)
print("GS picks:\n", gs)
print("PS picks:\n", ps)
print("P(option) for (0, 0):", slots.selection_probabilities(layer.scores)[0, 0].round(3))

############################################################
# Forward with the GS mask, then backward: every score gets a gradient,
# even for options that were not used

x = rng.normal(size=(2, 4)).astype(np.float32)
out = slots.slot_forward(layer, gs, x)
grad_x, score_grads = slots.slot_backward(layer, np.ones_like(out))
print("score gradients for (0, 0):", score_grads[0, 0].round(4))
print("nonzero score gradients:", np.count_nonzero(score_grads), "of", score_grads.size)

############################################################
# The exported network is just the argmax weights

print("exported weights:\n", slots.export_selected(layer).round(4))
