import contextlib
import io

import pytest

from powersums import cli


@pytest.fixture
def run_cli():
    """Invoke the CLI in-process, returning (exit_code, stdout)."""

    def _run(argv):
        buf = io.StringIO()
        with contextlib.redirect_stdout(buf):
            code = cli.main(argv)
        return code, buf.getvalue()

    return _run
