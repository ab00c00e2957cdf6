#!/usr/bin/env python3
"""Generate the benchmark problem files under benchmarks/.

Instances are seeded, so rerunning reproduces the checked-in files byte for byte.
"""
import argparse
import pathlib
import random


def random_towers(blocks, rng):
    order = blocks[:]
    rng.shuffle(order)
    towers = []
    for b in order:
        if towers and rng.random() < 0.6:
            rng.choice(towers).append(b)
        else:
            towers.append([b])
    return towers


def tower_facts(towers):
    facts = []
    for t in towers:
        facts.append(f"(on-table {t[0]})")
        for lower, upper in zip(t, t[1:]):
            facts.append(f"(on {upper} {lower})")
        facts.append(f"(clear {t[-1]})")
    return facts


def blocksworld(name, n, seed):
    rng = random.Random(seed)
    blocks = [f"b{i}" for i in range(1, n + 1)]
    init = random_towers(blocks, rng)
    goal = random_towers(blocks, rng)
    while goal == init:
        goal = random_towers(blocks, rng)
    goal_facts = [f for f in tower_facts(goal) if f.startswith("(on ")]
    return problem(name, "blocksworld", [" ".join(blocks)],
                   tower_facts(init) + ["(arm-empty)"], goal_facts)


def sussman():
    return problem("sussman", "blocksworld", ["a b c"],
                   ["(on-table a)", "(on-table b)", "(on c a)", "(clear b)", "(clear c)",
                    "(arm-empty)"],
                   ["(on a b)", "(on b c)"])


def gripper(name, balls):
    objs = ["rooma roomb - room", "left right - gripper",
            " ".join(f"ball{i}" for i in range(1, balls + 1)) + " - ball"]
    init = ["(at-robby rooma)", "(free left)", "(free right)"]
    init += [f"(at ball{i} rooma)" for i in range(1, balls + 1)]
    goal = [f"(at ball{i} roomb)" for i in range(1, balls + 1)]
    return problem(name, "gripper", objs, init, goal)


def depot(name, seed, crates=3):
    rng = random.Random(seed)
    places = ["depot0", "distributor0", "distributor1"]
    pallets = [f"pallet{i}" for i in range(len(places))]
    hoists = [f"hoist{i}" for i in range(len(places))]
    trucks = ["truck0", "truck1"]
    cs = [f"crate{i}" for i in range(crates)]
    objs = ["depot0 - depot", "distributor0 distributor1 - distributor",
            " ".join(trucks) + " - truck", " ".join(pallets) + " - pallet",
            " ".join(cs) + " - crate", " ".join(hoists) + " - hoist"]
    init = []
    for p, pl, h in zip(places, pallets, hoists):
        init += [f"(at {pl} {p})", f"(at {h} {p})", f"(available {h})"]
    for t in trucks:
        init.append(f"(at {t} {rng.choice(places)})")
    top = {pl: pl for pl in pallets}
    where = {pl: p for pl, p in zip(pallets, places)}
    for c in cs:
        pl = rng.choice(pallets)
        init += [f"(at {c} {where[pl]})", f"(on {c} {top[pl]})"]
        top[pl] = c
    init += [f"(clear {x})" for x in top.values()]
    goal = []
    targets = list(pallets)
    rng.shuffle(targets)
    for c, pl in zip(rng.sample(cs, min(2, crates)), targets):
        goal.append(f"(on {c} {pl})")
    return problem(name, "depot", objs, init, goal)


def driverlog(name, seed):
    rng = random.Random(seed)
    locs = ["s0", "s1", "s2"]
    paths = ["p0-1", "p1-2", "p2-0"]
    drivers = ["driver1", "driver2"]
    trucks = ["truck1", "truck2"]
    packages = ["package1", "package2", "package3"]
    objs = [" ".join(drivers) + " - driver", " ".join(trucks) + " - truck",
            " ".join(packages) + " - obj", " ".join(locs + paths) + " - location"]
    init = []
    for d in drivers:
        init.append(f"(at {d} {rng.choice(locs)})")
    for t in trucks:
        init += [f"(at {t} {rng.choice(locs)})", f"(empty {t})"]
    for p in packages:
        init.append(f"(at {p} {rng.choice(locs)})")
    for a in locs:
        for b in locs:
            if a != b:
                init.append(f"(link {a} {b})")
    for pth in paths:
        a, b = pth[1:].split("-")
        for x, y in ((f"s{a}", pth), (pth, f"s{a}"), (f"s{b}", pth), (pth, f"s{b}")):
            init.append(f"(path {x} {y})")
    goal = [f"(at {drivers[0]} {rng.choice(locs)})", f"(at {trucks[0]} {rng.choice(locs)})"]
    for p in packages:
        goal.append(f"(at {p} {rng.choice(locs)})")
    return problem(name, "driverlog", objs, init, goal)


def problem(name, domain, objects, init, goal):
    lines = [f"(define (problem {name})", f"  (:domain {domain})", "  (:objects"]
    lines += [f"    {o}" for o in objects]
    lines.append("  )")
    lines.append("  (:init")
    lines += [f"    {f}" for f in init]
    lines.append("  )")
    lines.append("  (:goal (and")
    lines += [f"    {f}" for f in goal]
    lines.append("  )))")
    return "\n".join(lines) + "\n"


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=pathlib.Path(__file__).resolve().parent.parent / "benchmarks",
                    type=pathlib.Path)
    args = ap.parse_args()
    files = {"blocksworld/sussman.pddl": sussman()}
    for n in range(3, 11):
        for k in range(1, 4):
            files[f"blocksworld/bw{n}-{k}.pddl"] = blocksworld(f"bw{n}-{k}", n, 1000 * n + k)
    for b in (1, 2, 3):
        files[f"gripper/gripper{b}.pddl"] = gripper(f"gripper{b}", b)
    for k in range(1, 4):
        files[f"depot/depot{k}.pddl"] = depot(f"depot{k}", 500 + k)
    for k in range(1, 4):
        files[f"driverlog/driverlog{k}.pddl"] = driverlog(f"driverlog{k}", 700 + k)
    for rel, text in files.items():
        path = args.out / rel
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text)
    print(f"wrote {len(files)} problems under {args.out}")


if __name__ == "__main__":
    main()
