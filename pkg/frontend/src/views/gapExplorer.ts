/** Gap explorer: a whole domain's concept hierarchy for one language,
 * with the three-state coloring and a language switcher. The tree comes
 * from the server already annotated; this renders it as nested lists. */

import { STATUS_COLORS } from "../colors.js";
import type { DomainTree, Language, TreeNode } from "../types.js";

export interface GapExplorerData {
  tree: DomainTree;
  languages: Language[];
}

export interface GapExplorerCallbacks {
  onLanguageChange?: (code: string) => void;
  onConceptClick?: (id: string) => void;
}

export function renderGapExplorer(
  container: HTMLElement,
  data: GapExplorerData,
  callbacks: GapExplorerCallbacks = {},
): void {
  container.textContent = "";
  const view = document.createElement("div");
  view.className = "gap-explorer";

  const header = document.createElement("div");
  header.className = "gap-header";
  const heading = document.createElement("h3");
  heading.textContent = `domain "${data.tree.root}"`;
  header.appendChild(heading);

  const switcher = document.createElement("select");
  switcher.className = "language-switcher";
  for (const lang of data.languages) {
    const option = document.createElement("option");
    option.value = lang.code;
    option.textContent = `${lang.name} (${lang.code})`;
    option.selected = lang.code === data.tree.language;
    switcher.appendChild(option);
  }
  switcher.addEventListener("change", () => {
    callbacks.onLanguageChange?.(switcher.value);
  });
  header.appendChild(switcher);

  const counts = { lexicalised: 0, gap: 0, unknown: 0 };
  for (const node of data.tree.nodes) {
    counts[node.status] += 1;
  }
  const summary = document.createElement("p");
  summary.className = "gap-summary";
  summary.textContent =
    `${data.tree.nodes.length} concepts: ${counts.lexicalised} lexicalised, ` +
    `${counts.gap} gaps, ${counts.unknown} unknown in ${data.tree.language}`;
  header.appendChild(summary);
  view.appendChild(header);

  const byId = new Map<string, TreeNode>(data.tree.nodes.map((node) => [node.id, node]));
  const rootNode = byId.get(data.tree.root);
  if (rootNode) {
    const list = document.createElement("ul");
    list.className = "gap-tree";
    list.appendChild(renderNode(rootNode, byId, callbacks, new Set()));
    view.appendChild(list);
  }

  const legend = document.createElement("p");
  legend.className = "legend";
  legend.textContent = "dark: word exists · light: no data · black: lexical gap";
  view.appendChild(legend);

  container.appendChild(view);
}

function renderNode(
  node: TreeNode,
  byId: Map<string, TreeNode>,
  callbacks: GapExplorerCallbacks,
  seen: Set<string>,
): HTMLElement {
  seen.add(node.id);
  const item = document.createElement("li");
  item.className = "tree-node";
  item.setAttribute("data-concept", node.id);
  item.setAttribute("data-status", node.status);

  const marker = document.createElement("span");
  marker.className = `status-marker status-${node.status}`;
  marker.style.backgroundColor = STATUS_COLORS[node.status];
  item.appendChild(marker);

  const label = document.createElement("span");
  label.className = "tree-label";
  label.textContent = node.lemmas.length > 0 ? `${node.lemmas.join(", ")}` : node.id;
  label.addEventListener("click", () => callbacks.onConceptClick?.(node.id));
  item.appendChild(label);

  const childNodes = node.children
    .map((id) => byId.get(id))
    .filter((child): child is TreeNode => child !== undefined && !seen.has(child.id));
  if (childNodes.length > 0) {
    const list = document.createElement("ul");
    for (const child of childNodes) {
      list.appendChild(renderNode(child, byId, callbacks, seen));
    }
    item.appendChild(list);
  }
  return item;
}
