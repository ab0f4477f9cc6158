import init, { hopf_stiefel_table, sumset, reduce } from "./pkg/multinull_web.js";

const $ = (id) => document.getElementById(id);

function showError(target, err) {
  target.innerHTML = "";
  const span = document.createElement("span");
  span.className = "error";
  span.textContent = String(err.message ?? err);
  target.appendChild(span);
}

function renderTable() {
  const out = $("hs-out");
  try {
    const data = JSON.parse(hopf_stiefel_table(+$("hs-p").value, +$("hs-r").value, +$("hs-s").value));
    const table = document.createElement("table");
    const head = table.insertRow();
    head.appendChild(Object.assign(document.createElement("th"), { textContent: "r \\ s" }));
    data.rows[0].forEach((_, j) => {
      head.appendChild(Object.assign(document.createElement("th"), { textContent: j + 1 }));
    });
    data.rows.forEach((row, i) => {
      const tr = table.insertRow();
      tr.appendChild(Object.assign(document.createElement("th"), { textContent: i + 1 }));
      row.forEach((v) => { tr.insertCell().textContent = v; });
    });
    out.replaceChildren(table);
  } catch (err) {
    showError(out, err);
  }
}

function renderSumset() {
  const out = $("ss-out");
  try {
    const d = JSON.parse(sumset(+$("ss-p").value, $("ss-a").value, $("ss-b").value));
    const verdict = (b) => (b.holds ? "holds" : "VIOLATED");
    out.innerHTML = "";
    const lines = [
      `A + B = ${d.sumset_text}`,
      `d(A+B) = ${d.cd.lhs} >= min(p, d(A) + d(B) - 1) = ${d.cd.rhs}: ${verdict(d.cd)}${d.cd.tight ? " (equality)" : ""}`,
      `deg(A+B) = ${d.deg.lhs} >= deg A + deg B = ${d.deg.rhs}: ${verdict(d.deg)}`,
    ];
    out.appendChild(Object.assign(document.createElement("pre"), { textContent: lines.join("\n") }));
  } catch (err) {
    showError(out, err);
  }
}

function renderReduce() {
  const out = $("rd-out");
  try {
    const d = JSON.parse(reduce($("rd-grid").value, $("rd-poly").value));
    const lines = [`field      ${d.field}`, `f          ${d.input}`, `remainder  ${d.remainder}`];
    d.cofactors.forEach((h, i) => lines.push(`h${i + 1}         ${h}    (g${i + 1} = ${d.generators[i]})`));
    lines.push(d.member ? "f vanishes on the grid" : "f does not vanish on the grid");
    out.replaceChildren(Object.assign(document.createElement("pre"), { textContent: lines.join("\n") }));
  } catch (err) {
    showError(out, err);
  }
}

async function main() {
  await init();
  $("status").textContent = "Ready. Results update as you type.";
  $("status").className = "ok";
  for (const id of ["hs-p", "hs-r", "hs-s"]) $(id).addEventListener("input", renderTable);
  for (const id of ["ss-p", "ss-a", "ss-b"]) $(id).addEventListener("input", renderSumset);
  for (const id of ["rd-poly", "rd-grid"]) $(id).addEventListener("input", renderReduce);
  renderTable();
  renderSumset();
  renderReduce();
}

main().catch((err) => showError($("status"), err));
