from hidproj.errors import ParameterError
from .reduced_form import ReducedForm, ColumnRowSelection, SOURCES, \
    outer_product_expand, similarity_check, similarity_form, outer_product_form
from .svd import reduced_svd
from .cpqr import cpqr, cpqr_reduced
from .lu import lu_reduced
from .cur import cur, cur_exactness
from .randomized import randomized_reduced


def get_factorization(name):
    if name == 'svd':
        return reduced_svd
    elif name in ['qr', 'cpqr']:
        return cpqr_reduced
    elif name == 'lu':
        return lu_reduced
    elif name == 'cur':
        return cur
    elif name in ['random', 'randomized']:
        return randomized_reduced
    else:
        raise ParameterError('ERROR: Factorization %s not found' % name)
