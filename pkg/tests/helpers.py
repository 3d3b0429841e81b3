import math

from impfloor.model import Circuit, Instance, SoftModule


def make_instance(areas, lam=3.0, width=None, height=None, aspect=1.0, names=None):
    names = names or [f"m{i}" for i in range(len(areas))]
    modules = tuple(SoftModule(n, a, lam) for n, a in zip(names, areas))
    total = math.fsum(areas)
    if width is None:
        width = math.sqrt(total / aspect)
        height = total / width
    return Instance(Circuit(width, height), modules)
