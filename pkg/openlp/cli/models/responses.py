"""
Report model for CLI commands.
"""

from typing import Optional

from pydantic import BaseModel, Field


class CommandReport(BaseModel):
    """Result of one command; deterministic for fixed input and flags unless timed."""

    command: str = Field(..., description="Subcommand that produced the report")
    verdict: Optional[bool] = Field(None, description="Entailment or consistency verdict")
    models: list[list[str]] = Field(default_factory=list, description="Sorted atom lists")
    explanations: list[list[str]] = Field(default_factory=list, description="Sorted atom lists")
    minimal: list[bool] = Field(
        default_factory=list, description="Subset-minimality flag per explanation"
    )
    program: Optional[str] = Field(None, description="Exported program text (translate)")
    stats: dict[str, int | float] = Field(default_factory=dict)

    model_config = {
        "json_schema_extra": {
            "examples": [
                {
                    "command": "abduce",
                    "verdict": True,
                    "models": [],
                    "explanations": [["r(o_sk0)"]],
                    "minimal": [True],
                    "stats": {"candidates": 4, "explanations": 1},
                }
            ]
        }
    }

    @property
    def exit_code(self) -> int:
        """0 for yes or success, 1 for no."""
        return 1 if self.verdict is False else 0

    def to_json(self) -> str:
        exclude = {"command"} if self.program is not None else {"command", "program"}
        return self.model_dump_json(exclude=exclude)

    def to_text(self) -> str:
        lines: list[str] = []
        if self.program is not None:
            return self.program
        if self.command == "solve":
            if not self.models:
                lines.append("no stable models")
            for index, model in enumerate(self.models, start=1):
                lines.append(f"model {index}: {{{', '.join(model)}}}")
        elif self.command == "abduce":
            if not self.explanations:
                lines.append("no explanations")
            for atoms, minimal in zip(self.explanations, self.minimal):
                suffix = " minimal" if minimal else ""
                lines.append(f"{{{', '.join(atoms)}}}{suffix}")
        else:
            lines.append("yes" if self.verdict else "no")
        lines += [f"% {key}: {value}" for key, value in sorted(self.stats.items())]
        return "\n".join(lines) + "\n"
