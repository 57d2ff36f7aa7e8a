"""Counterfactual generation with the trained toy cascade.

One anatomy frame from the test split, several EF targets; the EF read back
from each generated video shows how well the conditioning is followed.
Needs the checkpoints written by runs/toy2_train.py.

    python demos/toy_cascade.py --out /tmp/toy_demo
"""

from __future__ import annotations

import argparse
from pathlib import Path

import numpy as np
import torch

from echocdm.cascade import load_stage_models, preset, run_cascade
from echocdm.cli import save_gif
from echocdm.evalmetrics import EstimationFailed, estimate_ef
from echocdm.synthdata import cone_mask, read_dataset, to_model_range, to_unit_range

ROOT = Path(__file__).resolve().parents[1]
ap = argparse.ArgumentParser()
ap.add_argument("--data", default=str(ROOT / "runs" / "data"))
ap.add_argument("--ckpt", nargs=2, default=[str(ROOT / "runs" / "toy2" / f"stage{i}.ckpt") for i in range(2)])
ap.add_argument("--index", type=int, default=0, help="position in the test split")
ap.add_argument("--seed", type=int, default=0)
ap.add_argument("--out", default="/tmp/toy_demo")
args = ap.parse_args()
torch.set_num_threads(1)

cc = preset("toy2")
models = load_stage_models(cc, args.ckpt)
ds = read_dataset(args.data)
real = ds.load(ds.split("test")[args.index])
ref = to_model_range(torch.from_numpy(np.array(real.video[0])))
targets = [0.2, 0.35, 0.5, 0.65, 0.8]
print(f"anatomy from test video with true EF {real.ef_true:.3f}")

with torch.no_grad():
    vids = run_cascade(cc, models, ref.expand(len(targets), -1, -1), torch.tensor(targets),
                       torch.Generator().manual_seed(args.seed))
vids = to_unit_range(vids).clamp(0, 1).numpy()
mask = cone_mask(*vids.shape[-2:])
out = Path(args.out)
for lam, v in zip(targets, vids):
    try:
        got = f"{estimate_ef(v, mask):.3f}"
    except EstimationFailed as e:
        got = f"unreadable ({e})"
    print(f"  target EF {lam:.2f} -> estimated {got}")
    save_gif(v, out / f"gen_ef{int(lam * 100)}.gif", cc.stages[-1].fps)
print(f"GIFs in {out}")
