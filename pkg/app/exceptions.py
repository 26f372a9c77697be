class KodairaKitError(ValueError):
    """Base for every domain error raised by the kodaira-kit apps.

    Subclasses ValueError: all of them reject input values, never program state.
    """
