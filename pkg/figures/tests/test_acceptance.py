"""Figure-pipeline acceptance: steps and plateaus at the known gap
closings, and byte-stable output."""

import os

from floqssh_figures.render import FigureSpec, render


def report(ok: bool, detail: str) -> bool:
    print(f"ACCEPTANCE 10 (figure pipeline): {'PASS' if ok else 'FAIL'} - {detail}")
    return ok


def test_criterion_10_figure_pipeline(regime_dir, diagram_dir, tmp_path):
    fig3 = render(FigureSpec("fig3", regime_dir, str(tmp_path / "fig3_a.png")))
    steps = fig3.summary["steps"]
    thresholds_ok = (
        len(steps["V1"]) == 1
        and abs(steps["V1"][0] - 0.167) < 0.02
        and len(steps["V2"]) == 2
        and abs(steps["V2"][0] - 0.852) < 0.02
        and abs(steps["V2"][1] - 0.973) < 0.02
    )
    fig4 = render(FigureSpec("fig4", diagram_dir, str(tmp_path / "fig4_a.png")))
    plateaus_ok = (
        fig4.summary["plateaus"]["V1"] == [0, 1]
        and fig4.summary["plateaus"]["V2"] == [0, 1, 2]
    )
    stable = True
    for fig, indir in (("fig3", regime_dir), ("fig4", diagram_dir)):
        render(FigureSpec(fig, indir, str(tmp_path / f"{fig}_b.png")))
        a = open(tmp_path / f"{fig}_a.png", "rb").read()
        b = open(tmp_path / f"{fig}_b.png", "rb").read()
        stable &= a == b
    ok = thresholds_ok and plateaus_ok and stable
    assert report(
        ok,
        f"fig3 steps V1 {[round(x, 4) for x in steps['V1']]} "
        f"V2 {[round(x, 4) for x in steps['V2']]}; fig4 plateaus {fig4.summary['plateaus']}; "
        f"byte-stable rerender: {stable}",
    )
