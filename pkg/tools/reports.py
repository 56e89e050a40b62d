"""
Structured command reports and their human-readable rendering
"""
import hashlib
import json
from typing import Any, Dict, List
from colorama import Fore, Style
from pydantic import BaseModel, Field
from theorems.models import Verdict, WitnessReport


class Report(BaseModel):
    """What every CLI command emits on stdout"""
    command: str
    input_digest: str = ""
    result: Dict[str, Any] = Field(default_factory=dict)
    certificates: List[WitnessReport] = Field(default_factory=list)
    timings: Dict[str, float] = Field(default_factory=dict)

    def to_json(self) -> str:
        return self.model_dump_json(indent=2)


def digest(text: str) -> str:
    """sha256 of the raw input document"""
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def _verdict_lines(v: Dict[str, Any]) -> List[str]:
    if not v["applicable"]:
        status = f"{Fore.YELLOW}inapplicable{Style.RESET_ALL}"
    else:
        status = f"{Fore.GREEN}applicable{Style.RESET_ALL}"
    lines = [f"  {v['predicate']}: {status}"]
    for name, value in v["hypotheses"].items():
        lines.append(f"    hypothesis {name}: {value}")
    for name, value in v["predictions"].items():
        lines.append(f"    predicts {name} = {value}")
    for name, value in v["findings"].items():
        lines.append(f"    {name}: {value}")
    for c in v["certificates"]:
        w = WitnessReport.model_validate(c)
        lines.append(f"    certificate ({w.construction}): {w.summary()}")
    for c in v["cross_checks"]:
        colour = {"agrees": Fore.GREEN, "disagrees": Fore.RED}.get(c["status"], Fore.YELLOW)
        bound = f" (s <= {c['s_max']})" if c["bounded"] else ""
        lines.append(f"    check {c['claim']}{bound}: {colour}{c['status']}{Style.RESET_ALL} {c['detail']}".rstrip())
    for note in v["notes"]:
        lines.append(f"    note: {note}")
    return lines


def _value_lines(key: str, value: Any, indent: str = "") -> List[str]:
    if isinstance(value, list) and value and isinstance(value[0], dict):
        lines = [f"{indent}{key}:"]
        for item in value:
            lines.append(f"{indent}  - " + ", ".join(f"{k}={v}" for k, v in item.items()))
        return lines
    if isinstance(value, list):
        return [f"{indent}{key}: " + ("; ".join(str(x) for x in value) if value else "(none)")]
    if isinstance(value, dict):
        lines = [f"{indent}{key}:"]
        for k, v in value.items():
            lines.extend(_value_lines(k, v, indent + "  "))
        return lines
    return [f"{indent}{key}: {value}"]


def render_pretty(report: Report) -> str:
    """Coloured plain-text rendering behind --pretty"""
    lines = [f"{Fore.CYAN}{'='*70}", f"simiscalc {report.command}", f"{'='*70}{Style.RESET_ALL}"]
    for key, value in report.result.items():
        if key == "verdicts":
            lines.append("verdicts:")
            for v in value:
                lines.extend(_verdict_lines(v))
        else:
            lines.extend(_value_lines(key, value))
    if report.certificates:
        lines.append("certificates:")
        for w in report.certificates:
            mark = Fore.GREEN if w.verified else Fore.RED
            lines.append(f"  {mark}{w.construction}{Style.RESET_ALL}: {w.summary()}")
    if report.timings:
        lines.append("timings:")
        for name, seconds in report.timings.items():
            lines.append(f"  {name}: {seconds:.3f}s")
    return "\n".join(lines)


def verdicts_to_result(verdicts: List[Verdict]) -> List[Dict[str, Any]]:
    return [json.loads(v.model_dump_json()) for v in verdicts]
