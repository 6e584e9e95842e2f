"""Frobenius extension checks for quantum algebras at roots of unity."""

from ._frobex import (
    default_prime_for,
    grassmannian_census,
    qas_verify,
    qweyl_transfer,
    run,
)

__all__ = ["default_prime_for", "grassmannian_census", "qas_verify", "qweyl_transfer", "run"]
