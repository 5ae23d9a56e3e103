"""Removal of the non-local product-X term by one auxiliary site and a parity constraint."""

import logging

from ..pauli.models import PauliString, TermSum
from ..utils.errors import MalformedModelError, NoNonlocalTermError
from .models import EmbeddedModel

logger = logging.getLogger(__name__)


def embed_nonlocal(restricted: TermSum) -> EmbeddedModel:
    """Rewrite a restricted dual with one all-sites X product as a local model on r + 1 sites.

    The product term becomes X on the new site ``r``; every Z-string of odd weight
    gains a Z on site ``r``. On the subspace where X on all r + 1 sites equals +1
    the result is unitarily equivalent to the input.

    Raises:
        NoNonlocalTermError: If no term has an X-mask of weight above one.
        MalformedModelError: If there are several such terms, the product does not
            cover every site, or some term mixes X and Z factors.
    """
    r = restricted.n_sites
    full = (1 << r) - 1
    products = [(c, p) for c, p in restricted.terms if p.x.bit_count() > 1]
    if not products:
        raise NoNonlocalTermError("The model has no product-X term to embed")
    if len(products) > 1:
        raise MalformedModelError(f"Expected one product-X term, found {len(products)}")
    if products[0][1].x != full or products[0][1].z:
        raise MalformedModelError("The product-X term must act with X on every site")

    n = r + 1
    aux = 1 << r
    terms: list[tuple[float, PauliString]] = []
    for coeff, string in restricted.terms:
        if string.x and string.z:
            raise MalformedModelError(f"Term {string.label()} mixes X and Z factors")
        if string.x == full and string.x.bit_count() > 1:
            terms.append((coeff, PauliString(n_sites=n, x=aux)))
        elif string.x:
            terms.append((coeff, PauliString(n_sites=n, x=string.x)))
        else:
            z = string.z | aux if string.z.bit_count() % 2 else string.z
            terms.append((coeff, PauliString(n_sites=n, z=z)))

    model = EmbeddedModel(
        termsum=TermSum.build(n, terms),
        parity=PauliString(n_sites=n, x=(1 << n) - 1),
        physical_parity=1,
    )
    logger.debug("[Duality] Embedded %d-site dual into %d sites", r, n)
    return model
