from __future__ import annotations

from types import SimpleNamespace

import pytest

from transcenter import TranslationCenter

PAGE_SOURCE = (
    "<nav>⟦t:menu-link⟧Browse the catalog⟦/t⟧</nav>"
    "<h1>⟦t:heading⟧Welcome translators⟦/t⟧</h1>"
    "<p>⟦t:informational-text⟧Every page can be translated by the community.⟦/t⟧</p>"
    "<form>⟦t:button⟧Start translating⟦/t⟧</form>"
)


@pytest.fixture
def engine():
    return TranslationCenter()


@pytest.fixture
def seeded(engine):
    """Engine with one ingested page, Spanish registered, and two members."""
    items = engine.ingest_page("home", PAGE_SOURCE)
    engine.register_language("es", "Español")
    alice = engine.register_member("alice", "alice-pw")
    bob = engine.register_member("bob", "bob-pw")
    return SimpleNamespace(engine=engine, items=items, alice=alice, bob=bob)
