"""estimate: attack work factors for one tier or explicit parameters."""

from __future__ import annotations

import json

import click

from .tiers import TIERS, attack_rows, estimate_params, estimate_tier, format_table


@click.command()
@click.option("--tier", type=click.Choice(sorted(TIERS), case_sensitive=False))
@click.option("--r", "r_val", type=int)
@click.option("--w", "w_val", type=int)
@click.option("--t", "t_val", type=int)
@click.option("--target", type=int, default=0, show_default=True,
              help="Claimed classical bits to compare against.")
@click.option("--json", "json_path", type=click.Path(),
              help="Also write the rows as JSON (readable by `otframe params`).")
def main(tier, r_val, w_val, t_val, target, json_path):
    """Estimate information-set-decoding work factors."""
    if tier and (r_val or w_val or t_val):
        raise click.UsageError("give either --tier or --r/--w/--t, not both")
    if tier:
        est = estimate_tier(tier)
    elif r_val and w_val and t_val:
        est = estimate_params(r_val, w_val, t_val, target)
    else:
        raise click.UsageError("need --tier or all of --r, --w, --t")
    rows = attack_rows(est)
    click.echo(f"r={est.r} w={est.w} t={est.t} (n={est.n})")
    click.echo(format_table(rows))
    if json_path:
        with open(json_path, "w") as fh:
            json.dump(rows, fh, indent=2)
            fh.write("\n")


if __name__ == "__main__":
    main()
