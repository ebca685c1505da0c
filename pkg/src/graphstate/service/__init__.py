"""HTTP service layer: pydantic schemas, shared handlers, FastAPI app."""

from . import handlers, schemas

__all__ = ["handlers", "schemas"]
