# Copyright (c) 2024 by Jonathan AW
# conftest.py

"""
Shared fixtures for testing.

Design Patterns:

1. Fixture:
- Fixtures provide a fixed baseline: the adaptive cruise control sample, tiny single-variable models built from DSL snippets, and the services wired with their default dependencies.

2. Dependency Injection:
- Services are created here and injected into the test functions, so a test can swap a collaborator (e.g. a mocked rule factory) without touching the others.

3. Use of Pytest:
- The ACC text and model are session-scoped because every layer reads them; everything else is rebuilt per test.
"""
from pathlib import Path

import pytest

from bl.services.random_model_service import RandomModelService
from bl.services.synthesis_service import SynthesisService
from bl.services.validation_service import ValidationService
from bl.services.verification_service import VerificationService
from dal.stpa_parser import parse_stpa

ROOT = Path(__file__).resolve().parent.parent
ACC_PATH = ROOT / "samples" / "acc.stpa"


def model_text(ucas: str = "", dcas: str = "", variables: str = "x: { true, false }", actions: str = "CA",
               name: str = "C") -> str:
    """A complete .stpa text around the given sections."""
    return ("controller " + name + " {\n"
            "  processModel {\n    " + variables + "\n  }\n"
            "  controlActions { " + actions + " }\n"
            "  ucas {\n" + ucas + "\n  }\n"
            "  dcas {\n" + dcas + "\n  }\n"
            "}\n")


@pytest.fixture(scope="session")
def acc_path():
    return ACC_PATH


@pytest.fixture(scope="session")
def acc_text():
    return ACC_PATH.read_text(encoding="utf-8")


@pytest.fixture(scope="session")
def acc_model(acc_text):
    return parse_stpa(acc_text)


@pytest.fixture(scope="session")
def acc_result(acc_model):
    return SynthesisService().synthesize(acc_model)


@pytest.fixture(scope="function")
def build_model():
    """
    Fixture returning a builder for small models: build_model(ucas=..., dcas=..., variables=..., actions=...).
    """
    def build(**sections):
        return parse_stpa(model_text(**sections))
    yield build


@pytest.fixture(scope="function")
def validation_service():
    yield ValidationService()


@pytest.fixture(scope="function")
def synthesis_service(validation_service):
    yield SynthesisService(validation_service)


@pytest.fixture(scope="function")
def verification_service():
    yield VerificationService(workers=1)


@pytest.fixture(scope="function")
def random_model_service(validation_service):
    yield RandomModelService(validation_service)
