class GeneratorError(ValueError):
    pass
