"""Regenerate every corpus fixture and golden output in this directory.

Run from the repository root:  python3 corpus/regenerate.py
All outputs are deterministic (seed 0), so reruns must be byte-identical.
"""

import os
import subprocess
import sys

HERE = os.path.dirname(os.path.abspath(__file__))


def main():
    from tiltbench import corpus, serialize
    from tiltbench.reps import simple

    fig1 = corpus.fig1_algebra()
    serialize.save(serialize.algebra_to_dict(fig1), os.path.join(HERE, "fig1.json"))
    serialize.save(serialize.algebra_to_dict(corpus.fig2_algebra()), os.path.join(HERE, "fig2.json"))
    serialize.save(serialize.algebra_to_dict(corpus.sec5_algebra()), os.path.join(HERE, "sec5_A.json"))
    serialize.save(serialize.algebra_to_dict(corpus.sec5_b_algebra()), os.path.join(HERE, "sec5_B.json"))
    serialize.save(
        serialize.complex_to_dict(corpus.fig1_tilting_complex(fig1), algebra_ref="fig1.json"),
        os.path.join(HERE, "fig1_T.json"),
    )
    serialize.save(
        serialize.module_to_dict(simple(fig1, "1"), algebra_ref="fig1.json"),
        os.path.join(HERE, "fig1_S1.json"),
    )

    golden = os.path.join(HERE, "golden")
    os.makedirs(golden, exist_ok=True)

    def run(outname, *cli_args):
        out = os.path.join(golden, outname)
        cmd = [sys.executable, "-m", "tiltbench.cli", "-o", out] + list(cli_args)
        res = subprocess.run(cmd, cwd=HERE, capture_output=True, text=True)
        print(outname, "->", res.returncode)
        if res.returncode not in (0, 1):
            print(res.stderr)
            raise SystemExit(1)

    run("alg_check_fig1.json", "alg", "check", "fig1.json")
    run("alg_check_fig2.json", "alg", "check", "fig2.json")
    run("alg_check_sec5_A.json", "alg", "check", "sec5_A.json")
    run("nust_fig1.json", "nust", "fig1.json")
    run("nust_sec5_A.json", "nust", "sec5_A.json")
    run("tilting_verify_fig1_T.json", "tilting", "verify", "fig1.json", "fig1_T.json")
    run("nustable_check_fig1_T.json", "nustable", "check", "fig1.json", "fig1_T.json")
    run("endalg_fig1_T.json", "endalg", "fig1.json", "fig1_T.json")
    run(
        "sec5_T.json",
        "tilting",
        "construct",
        "sec5_A.json",
        "--p",
        "1",
        "--q",
        "3,4",
        "-r",
        "1",
        "-s",
        "1",
    )
    run("tilting_verify_sec5_T.json", "tilting", "verify", "sec5_A.json", "golden/sec5_T.json")
    run("nustable_check_sec5_T.json", "nustable", "check", "sec5_A.json", "golden/sec5_T.json")
    run("endalg_sec5_T.json", "endalg", "sec5_A.json", "golden/sec5_T.json")
    run(
        "stable_image_fig1_S1.json",
        "stable-image",
        "fig1.json",
        "fig1_T.json",
        "fig1_S1.json",
    )


if __name__ == "__main__":
    main()
