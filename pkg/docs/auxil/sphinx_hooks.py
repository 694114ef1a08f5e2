def autodoc_process_bases(app, name, obj, option, bases: list) -> None:  # type: ignore
    """Show the standard library bases of the enums instead of their private reprs"""
    for idx, raw_base in enumerate(bases):
        base = str(raw_base)

        if "IntEnum" in base:
            bases[idx] = ":class:`enum.IntEnum`"
        elif "Enum" in base:
            bases[idx] = ":class:`enum.Enum`"
        elif "TypedDict" in base:
            bases[idx] = ":class:`typing.TypedDict`"
