"""JSON schemas for the CLI's machine-readable outputs."""

_COEFF = {'type': 'string', 'minLength': 1}

TABLE_SCHEMA = {
    'type': 'object',
    'required': ['dim', 'products'],
    'properties': {
        'dim': {'type': 'integer', 'minimum': 1},
        'r': {'type': 'integer', 'minimum': 2},
        'a': {'type': 'integer', 'minimum': 1},
        'hj_fraction': {'type': 'array', 'items': {'type': 'integer', 'minimum': 2}},
        'self_intersections': {'type': 'integer', 'minimum': 1},
        'certification': {'type': 'string'},
        'products': {
            'type': 'array',
            'items': {
                'type': 'object',
                'required': ['j', 'i', 'k'],
                'properties': {
                    'j': {'type': 'integer', 'minimum': 0},
                    'i': {'type': 'integer', 'minimum': 0},
                    'k': {'type': 'integer', 'minimum': 0},
                    'coeff': _COEFF,
                },
                'additionalProperties': False,
            },
        },
    },
    'additionalProperties': False,
}

GAUSS_SCHEMA = {
    'type': 'object',
    'required': ['r', 'a', 'b', 'word'],
    'properties': {
        'r': {'type': 'integer', 'minimum': 2},
        'a': {'type': 'integer', 'minimum': 1},
        'b': {'type': 'integer', 'minimum': 1},
        'word': {'type': 'array', 'items': {'type': 'integer', 'minimum': 1}},
    },
    'additionalProperties': False,
}

DIFF_SCHEMA = {
    'type': 'object',
    'required': ['r', 'a', 'entries'],
    'properties': {
        'r': {'type': 'integer', 'minimum': 2},
        'a': {'type': 'integer', 'minimum': 1},
        'entries': {
            'type': 'array',
            'items': {
                'type': 'object',
                'required': ['i', 'j', 'value'],
                'properties': {
                    'i': {'type': 'integer', 'minimum': 1},
                    'j': {'type': 'integer', 'minimum': 1},
                    'value': _COEFF,
                },
                'additionalProperties': False,
            },
        },
    },
    'additionalProperties': False,
}

ORDER_SCHEMA = {
    'type': 'object',
    'required': ['n', 'q', 'cells', 'structure_constants'],
    'properties': {
        'n': {'type': 'integer', 'minimum': 2},
        'q': {'type': 'integer', 'minimum': 1},
        'cells': {
            'type': 'array',
            'items': {'type': 'array', 'items': {
                'type': 'array',
                'items': {
                    'type': 'object',
                    'required': ['sign', 'exp', 'k'],
                    'properties': {
                        'sign': {'enum': [1, -1]},
                        'exp': {'type': 'integer', 'minimum': 0},
                        'k': {'type': 'integer', 'minimum': 0},
                    },
                    'additionalProperties': False,
                },
            }},
        },
        'structure_constants': {
            'type': 'array',
            'items': {
                'type': 'object',
                'required': ['j', 'i', 'k', 'value'],
                'properties': {
                    'j': {'type': 'integer', 'minimum': 0},
                    'i': {'type': 'integer', 'minimum': 0},
                    'k': {'type': 'integer', 'minimum': 0},
                    'value': _COEFF,
                },
                'additionalProperties': False,
            },
        },
    },
    'additionalProperties': False,
}

VERIFY_SCHEMA = {
    'type': 'object',
    'required': ['suite', 'passed', 'checks'],
    'properties': {
        'suite': {'type': 'string'},
        'passed': {'type': 'boolean'},
        'checks': {
            'type': 'array',
            'items': {
                'type': 'object',
                'required': ['name', 'passed'],
                'properties': {
                    'name': {'type': 'string'},
                    'passed': {'type': 'boolean'},
                    'detail': {'type': 'string'},
                    'elapsed': {'type': 'number'},
                },
                'additionalProperties': False,
            },
        },
    },
    'additionalProperties': False,
}
