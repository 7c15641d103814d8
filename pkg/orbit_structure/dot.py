"""
Graphviz export of orbit graphs.

Edges point from the cell holding the lower element of the witnessing
comparability to the cell holding the upper one. Render with

    dot -Tsvg orbit_graph.gv -o orbit_graph.svg
"""


class OrbitGraphFormatter:
    def vertex_attributes(self, og, vertex):
        return [f'label="D{vertex}({og.cell_sizes[vertex]})"']

    def edge_attributes(self, og, c, d):
        if og.orientation[(c, d)] == 'both':
            return ['dir=both']
        return None


def _edge_endpoints(og, c, d):
    return (d, c) if og.orientation[(c, d)] == 'above' else (c, d)


def orbit_graph_to_dot(og, formatter=OrbitGraphFormatter(), name='orbits'):
    lines = [f'digraph {name} {{', '    rankdir=BT;']
    for vertex in og.vertices:
        line = f'    D{vertex}'
        attributes = formatter.vertex_attributes(og, vertex)
        if attributes:
            line += f" [{','.join(attributes)}]"
        lines.append(line + ';')
    for c, d in sorted(og.edges):
        tail, head = _edge_endpoints(og, c, d)
        line = f'    D{tail} -> D{head}'
        attributes = formatter.edge_attributes(og, c, d)
        if attributes:
            line += f" [{','.join(attributes)}]"
        lines.append(line + ';')
    lines.append('}')
    return '\n'.join(lines) + '\n'
