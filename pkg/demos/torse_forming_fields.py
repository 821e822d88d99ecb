#!/usr/bin/env python3
"""Torse-forming analysis of candidate vector fields.

A 1-form omega (the g-dual of the field) is torse-forming when
nabla omega = rho g + beta (x) omega for a function rho and a 1-form
beta.  Special shapes: beta = 0 with rho = 1 is a concurrent field,
beta = 0 with other rho concircular, rho = 0 recurrent.  The analyzer
also normalises the field to unit length and re-checks the defining
equation there, exactly when |v|^2 has a polynomial square root and by
float sampling otherwise.
"""
from parageo.builtins import load_builtin
from parageo.conditions import torse_forming_analyze
from parageo.geometry import VectorField, koszul_connection


def show(title, rep):
    print(f"-- {title} --")
    if not rep.is_torse_forming:
        print("  not torse-forming; witnesses:")
        for w in rep.witnesses:
            print(f"    {w}")
        print()
        return
    beta = "(" + ", ".join(str(b) for b in rep.beta) + ")"
    print(f"  rho = {rep.rho}, beta = {beta}, special shape: {rep.special}")
    ua = rep.unit
    if ua is not None:
        print(f"  unit analysis ({ua.mode} mode):")
        for name, ok in ua.checks.items():
            print(f"    {name}: {'ok' if ok else 'FAIL'}")
        if ua.mode == "sampled":
            print(f"    {ua.samples} sample points, max relative residual "
                  f"{ua.max_residual:.2e} (tolerance {ua.tolerance:.0e})")
        print(f"    unit field concircular: {ua.concircular}")
    for note in rep.notes:
        print(f"  note: {note}")
    print()


def main():
    man = load_builtin("flat3")
    conn = koszul_connection(man.metric)
    chart = man.chart

    position = man.fields["position"]
    rep = torse_forming_analyze(man.metric, conn, position, seed=3)
    show("flat space, position field x d/dx + y d/dy + z d/dz", rep)

    tripled = VectorField(chart, tuple(chart.parse(f"3*{n}")
                                       for n in chart.coords))
    show("flat space, tripled position field",
         torse_forming_analyze(man.metric, conn, tripled, seed=3))

    axis = VectorField(chart, (chart.parse("x"), chart.zero(), chart.zero()))
    show("flat space, single-axis field x d/dx",
         torse_forming_analyze(man.metric, conn, axis))

    man7 = load_builtin("sec7")
    conn7 = koszul_connection(man7.metric)
    show("sec7, the structure's reeb field",
         torse_forming_analyze(man7.metric, conn7, man7.fields["reeb"]))

    print("The position field is concurrent (rho = 1, beta = 0) and its")
    print("normalisation is concircular; |position|^2 has no polynomial")
    print("square root, so that part is confirmed by sampling.  The reeb")
    print("field of sec7 already fails the defining equation on (e1,e1).")


if __name__ == "__main__":
    main()
