"""Module de journalisation."""
from .journal import EntreeJournal, Journal, NiveauLog

__all__ = ["EntreeJournal", "Journal", "NiveauLog"]
