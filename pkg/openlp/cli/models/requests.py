"""
Request model for CLI commands.
All flag validation using Pydantic.
"""

from typing import Literal, Optional

from pydantic import BaseModel, Field, model_validator

Subcommand = Literal["solve", "query", "open-query", "translate", "abduce", "check"]

MODES: dict[str, set[str]] = {
    "query": {"credulous", "skeptical"},
    "open-query": {"crd", "skp", "cs", "sc"},
}


class CommandRequest(BaseModel):
    """One CLI invocation: a subcommand, its input files and its flags."""

    subcommand: Subcommand = Field(..., description="Command to run")
    inputs: list[str] = Field(..., min_length=1, description="Program files, concatenated")
    query: Optional[str] = Field(default=None, min_length=1, description="Ground query text")
    mode: Optional[str] = Field(default=None, description="Entailment mode")
    engine: Literal["oracle", "pi"] = Field(default="oracle", description="Open inference engine")
    depth: Optional[int] = Field(default=None, ge=0, description="Term nesting bound")
    budget: int = Field(default=0, ge=0, description="Skolem constants abduction may use")
    skeptical_consequence: bool = Field(default=False)
    require_consistent: bool = Field(default=True)
    modulo_skolems: bool = Field(default=False)
    ground: bool = Field(default=False)
    unfold: bool = Field(default=False)
    readable: bool = Field(default=False)
    open: bool = Field(default=False, description="check: look for a consistent completion")
    output: Literal["text", "json"] = Field(default="text")
    workers: Optional[int] = Field(default=None, ge=1, le=64)
    strategy: Optional[Literal["propagate", "brute-force"]] = Field(default=None)
    timing: bool = Field(default=False, description="Report wall time (output is then not stable)")

    model_config = {
        "json_schema_extra": {
            "examples": [
                {
                    "subcommand": "open-query",
                    "inputs": ["example1.lp"],
                    "query": "q",
                    "mode": "skp",
                    "engine": "pi",
                },
                {
                    "subcommand": "abduce",
                    "inputs": ["diagnosis.lp"],
                    "query": "q",
                    "budget": 1,
                },
            ]
        }
    }

    @model_validator(mode="after")
    def check_flags(self) -> "CommandRequest":
        """Flags must make sense for the chosen subcommand."""
        allowed = MODES.get(self.subcommand)
        if allowed is not None:
            if self.mode is None:
                self.mode = "credulous" if self.subcommand == "query" else "crd"
            if self.mode not in allowed:
                raise ValueError(f"--mode for {self.subcommand} must be one of {sorted(allowed)}")
        elif self.mode is not None:
            raise ValueError(f"--mode is not valid for {self.subcommand}")

        if self.subcommand in {"query", "open-query", "abduce"} and self.query is None:
            raise ValueError(f"{self.subcommand} needs --query")
        pi_modes = {"crd", "skp"}
        if self.engine == "pi" and (self.subcommand != "open-query" or self.mode not in pi_modes):
            raise ValueError("--engine pi supports open-query with --mode crd or skp only")
        if (self.ground or self.unfold or self.readable) and self.subcommand != "translate":
            raise ValueError("--ground, --unfold and --readable apply to translate only")
        if self.ground and self.unfold:
            raise ValueError("--ground and --unfold are mutually exclusive")
        if self.subcommand != "abduce" and (
            self.budget or self.skeptical_consequence or self.modulo_skolems
        ):
            raise ValueError(
                "--budget, --skeptical-consequence and --modulo-skolems apply to abduce only"
            )
        if self.open and self.subcommand != "check":
            raise ValueError("--open applies to check only")
        return self
