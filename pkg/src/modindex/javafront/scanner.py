"""Discovery and parsing of all Java sources under a directory tree."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from .model import Diagnostic, SourceFile
from .parser import parse_file

_SKIP_DIRS = frozenset({".git", ".svn", ".hg", "node_modules"})


def find_java_files(root: str | Path) -> list[Path]:
    """All *.java files under root, sorted by relative path."""
    root = Path(root)
    found: list[Path] = []
    for dirpath, dirnames, filenames in os.walk(root):
        dirnames[:] = sorted(d for d in dirnames if d not in _SKIP_DIRS)
        for name in sorted(filenames):
            if name.endswith(".java"):
                found.append(Path(dirpath) / name)
    found.sort(key=lambda p: p.relative_to(root).as_posix())
    return found


def read_source(path: Path, rel_path: str, diagnostics: list[Diagnostic]) -> str:
    """Read a source file as UTF-8, substituting undecodable bytes."""
    data = path.read_bytes()
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError:
        diagnostics.append(
            Diagnostic(rel_path, 1, "file is not valid UTF-8; undecodable bytes replaced")
        )
        return data.decode("utf-8", errors="replace")


def parse_tree(root: str | Path, jobs: int = 1) -> list[SourceFile]:
    """Parse every Java file under root into SourceFile models.

    Results are ordered by relative path regardless of job count, so the
    parallel and serial paths produce identical output.
    """
    root = Path(root)
    paths = find_java_files(root)

    def parse_one(path: Path) -> SourceFile:
        rel = path.relative_to(root).as_posix()
        read_diags: list[Diagnostic] = []
        text = read_source(path, rel, read_diags)
        parsed = parse_file(text, rel)
        if read_diags:
            parsed.diagnostics = read_diags + parsed.diagnostics
        return parsed

    if jobs > 1 and len(paths) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(parse_one, paths))
    return [parse_one(p) for p in paths]
