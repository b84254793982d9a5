"""Render reliability reports: JSON, aligned tables, and term traces."""

import json


def report_json(report, indent=2):
    return json.dumps(report.to_dict(), indent=indent, sort_keys=True)


def report_table(report, digits=10):
    """Aligned Metric | Value table for one engine run."""
    rows = [
        ("Method", report.method),
        ("Reliability", f"{report.reliability:.{digits}f}"),
        ("MPs (p)", report.num_mps),
        ("Terms evaluated", report.num_terms),
        ("Complete terms eliminated", report.complete_terms_discarded),
        ("Complete-term net sign", report.complete_net_sign),
    ]
    if report.num_states:
        rows.append(("States enumerated", report.num_states))
    rows.append(("Elapsed (ms)", f"{report.elapsed_ms:.3f}"))
    return _table(("Metric", "Value"), rows)


def comparison_table(comparison, digits=10):
    rows = []
    for name, r in comparison.reports.items():
        rows.append((
            name,
            f"{r.reliability:.{digits}f}",
            r.num_terms if name != "oracle" else f"{r.num_states} states",
            r.complete_terms_discarded,
            f"{r.elapsed_ms:.3f}",
        ))
    lines = [_table(("Engine", "Reliability", "Terms", "Eliminated", "Elapsed (ms)"), rows), ""]
    status = "agree" if comparison.agreed else "DISAGREE"
    lines.append(f"Engines {status}: max deviation {comparison.max_deviation:.3e} "
                 f"(tolerance {comparison.tolerance:.1e})")
    return "\n".join(lines)


def trace_table(rows, p, digits=10):
    """Per-term log in creation order: index, MP subset, vector, Pr, sign, running R.

    Eliminated complete terms are listed with R shown as "complete".
    """
    body = []
    for row in rows:
        term = row.term
        if row.complete:
            running = "complete"
        elif row.running is None:
            running = ""
        else:
            running = _num(row.running, digits)
        body.append((
            row.index,
            _tuple(term.subset_bits(p)),
            str(term.vector),
            _num(term.prob, digits),
            "+1" if term.sign > 0 else "-1",
            running,
        ))
    return _table(("i", "MPs", "vector", "Pr", "sign", "R"), body)


def mp_listing(undirected, directed):
    lines = []
    for idx, q in enumerate(undirected, 1):
        lines.append(f"Q_{idx} = {q}")
    lines.append("")
    for idx, mp in enumerate(directed, 1):
        lines.append(f"P_{idx} = {mp}  vector {mp.augmented}")
    return "\n".join(lines)


def _num(x, digits):
    # trailing zeros off so table values read like 0.81, 0.6561
    text = f"{x:.{digits}f}".rstrip("0").rstrip(".")
    return text if text not in ("", "-0") else "0"


def _tuple(bits):
    return "(" + ", ".join(str(b) for b in bits) + ")"


def _table(header, rows):
    cells = [tuple(str(c) for c in header)] + [tuple(str(c) for c in r) for r in rows]
    widths = [max(len(r[k]) for r in cells) for k in range(len(header))]

    def fmt(r):
        return "| " + " | ".join(c.ljust(w) for c, w in zip(r, widths)) + " |"

    lines = [fmt(cells[0]), "|" + "|".join("-" * (w + 2) for w in widths) + "|"]
    lines.extend(fmt(r) for r in cells[1:])
    return "\n".join(lines)
