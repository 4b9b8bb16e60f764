"""
How good is the mask greedy selection finds?
============================================

A 2-4-2 network with K = 2 has 16 connections, so every one of the
2**16 selections can be scored. Greedy selection is then ranked
against all of them.
"""
from slotmachines import analysis

task = analysis.MicroTask(sizes=(2, 4, 2), K=2, seed=0)
layers = analysis.micro_layers(task)

############################################################
# Exhaustive ranking

ranking = analysis.brute_force_oracle(task, layers)
print("configurations:", len(ranking))
print("best / median / worst loss:", ranking.losses[0], ranking.losses[len(ranking) // 2],
      ranking.losses[-1])

############################################################
# Train the scores and see where the chosen mask lands

masks, loss, _ = analysis.train_micro_gs(task, layers, steps=300)
print("GS loss:", loss)
print("fraction of selections strictly better:", ranking.fraction_better_than(loss))
ranking.to_csv("oracle_ranking.csv", top=100)
