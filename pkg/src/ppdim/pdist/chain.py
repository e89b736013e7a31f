"""
size 链：1, p-1, 2, p-2, …，位置 i 上的元素 size 为 i
"""

from dataclasses import dataclass
from typing import List, Tuple

from .size import size_table


@dataclass(frozen=True)
class ChainDiagram:
    p: int
    entries: Tuple[int, ...]

    def __len__(self) -> int:
        return len(self.entries)

    def edges(self) -> List[Tuple[int, int]]:
        return list(zip(self.entries, self.entries[1:]))

    def to_dot(self) -> str:
        lines = [f"graph size_chain_p{self.p} {{"]
        for position, x in enumerate(self.entries):
            lines.append(f'  x{x} [label="{x} (size {position})"];')
        for u, v in self.edges():
            lines.append(f"  x{u} -- x{v};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_text(self) -> str:
        return " - ".join(str(x) for x in self.entries)


def chain_diagram(p: int) -> ChainDiagram:
    """从 1 出发，每次走到 size 恰好加一的反向移动"""
    table = size_table(p)
    entries = [1]
    while True:
        u = entries[-1]
        step = [v for v in (p - u, p - u + 1) if 1 <= v <= p - 1 and table[v] == table[u] + 1]
        if not step:
            break
        entries.append(step[0])
    return ChainDiagram(p, tuple(entries))
