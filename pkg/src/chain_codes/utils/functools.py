def decorator(dec):
    def new_dec(func):
        ret = dec(func)
        ret.__decorated = func # pylint: disable=W0212
        return ret
    return new_dec


@decorator
def factory(cls):
    """
        Turns `cls` into a registry of named products.

        The decorated class gets an ``AVAILABLE`` dict, a ``register(name)``
        decorator adding a product to it, ``create(name, *args, **kwargs)``
        which builds a registered product and ``names()`` listing them in
        registration order. Unknown names raise ``cls.MISSING`` (defaults
        to ``KeyError``).
    """

    def register(cls, name):
        @decorator
        def dec(product):
            cls.AVAILABLE[name] = product
            return product
        return dec

    def create(cls, name, *args, **kwargs):
        if name not in cls.AVAILABLE:
            raise cls.MISSING("Unknown name '{}' (available: {})".format(name, ', '.join(cls.AVAILABLE)))
        return cls.AVAILABLE[name](*args, **kwargs)

    def names(cls):
        return list(cls.AVAILABLE)

    cls.AVAILABLE = {}
    if not hasattr(cls, 'MISSING'):
        cls.MISSING = KeyError
    cls.register = classmethod(register)
    cls.create = classmethod(create)
    cls.names = classmethod(names)

    return cls
