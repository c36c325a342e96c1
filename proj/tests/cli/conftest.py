import json
import os
import pathlib
import subprocess

import jsonschema
import pytest


@pytest.fixture(scope="session")
def chessfad_bin():
    path = os.environ.get("CHESSFAD_BIN")
    if not path:
        pytest.skip("CHESSFAD_BIN not set")
    return path


@pytest.fixture(scope="session")
def schemas():
    root = pathlib.Path(os.environ.get("CHESSFAD_SCHEMAS", pathlib.Path(__file__).parents[2] / "schemas"))
    return {p.name.removesuffix(".schema.json"): json.loads(p.read_text()) for p in root.glob("*.schema.json")}


@pytest.fixture
def run(chessfad_bin):
    def _run(*args, env=None, check=None):
        full_env = dict(os.environ)
        full_env.pop("CHESSFAD_WORKERS", None)
        if env:
            full_env.update(env)
        proc = subprocess.run([chessfad_bin, *map(str, args)], capture_output=True, text=True, env=full_env)
        if check is not None:
            assert proc.returncode == check, proc.stderr
        return proc

    return _run


@pytest.fixture
def validate_json(schemas):
    def _validate(doc, name):
        jsonschema.validate(doc, schemas[name])

    return _validate
