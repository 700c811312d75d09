from pathlib import Path
from typing import Dict, List


class FieldFileParser:
    """
    A parser for .field files which are like this:

    dim nv ne
    x [y]                      (nv lines)
    i j [k]                    (ne lines, 0-based vertex indices)
    field <name> <vertex|element>
    value                      (one line per vertex or element)

    Any number of field blocks may follow the elements.
    """

    @staticmethod
    def parse(filepath: Path) -> Dict:
        """Parse a .field file into a Dict with the mesh and its fields.

        Args:
            filepath (Path): .field file to be read.

        Returns:
            Dict: dictionary with "mesh" set to a dict holding "vertices" and
                "elements", and "quantities" set to a dict of fields, each with a
                "location" and "values".

        Raises:
            ValueError: if a line cannot be parsed or the file ends prematurely.
        """
        with filepath.open() as f:
            lines: List[str] = [line.strip() for line in f.readlines()]

        def error(linenr: int) -> ValueError:
            return ValueError(
                f"Error parsing field file '{filepath}', line {linenr+1}."
            )

        try:
            dim, nv, ne = (int(v) for v in lines[0].split())
        except (ValueError, IndexError):
            raise error(0)

        linenr = 1
        vertices = []
        elements = []
        try:
            for linenr in range(1, 1 + nv):
                vertices.append([float(v) for v in lines[linenr].split()])
            for linenr in range(1 + nv, 1 + nv + ne):
                elements.append([int(v) for v in lines[linenr].split()])
        except (ValueError, IndexError):
            raise error(linenr)

        if any(len(v) != dim for v in vertices) or any(
            len(e) != dim + 1 for e in elements
        ):
            raise ValueError(
                f"Error parsing field file '{filepath}', "
                f"inconsistent coordinate or connectivity width."
            )

        quantities: Dict = {}
        linenr = 1 + nv + ne
        while linenr < len(lines):
            if len(lines[linenr]) == 0:
                linenr += 1
                continue

            header = lines[linenr].split()
            if len(header) != 3 or header[0] != "field":
                raise error(linenr)

            _, name, location = header
            count = nv if location == "vertex" else ne
            block = lines[linenr + 1 : linenr + 1 + count]
            if len(block) != count:
                raise error(linenr)
            try:
                values = [float(v) for v in block]
            except ValueError:
                raise error(linenr)

            quantities[name] = dict(location=location, values=values)
            linenr += 1 + count

        return dict(
            mesh=dict(vertices=vertices, elements=elements), quantities=quantities
        )
