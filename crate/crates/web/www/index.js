import init, { verify_report, expansion_trace, random_matrix } from "./pkg/cubedet_web.js";

const $ = (id) => document.getElementById(id);

function showError(e) {
  $("error").hidden = false;
  $("error").textContent = String(e);
}

function clearError() {
  $("error").hidden = true;
}

function orderOf(text) {
  const t = text.trim();
  if (t.startsWith("{")) {
    try { return JSON.parse(t).order; } catch { return null; }
  }
  return parseInt(t.split(/\s+/)[0], 10);
}

function table(headers, rows) {
  const head = "<tr>" + headers.map((h) => `<th>${h}</th>`).join("") + "</tr>";
  const body = rows.map((r) => "<tr>" + r.map((c) => `<td>${c}</td>`).join("") + "</tr>").join("");
  return `<table>${head}${body}</table>`;
}

function runVerify() {
  clearError();
  try {
    const r = JSON.parse(verify_report($("matrix").value));
    const paths = r.paths.map((p) => [p.name, p.value, p.agrees ? '<span class="ok">ok</span>' : '<span class="bad">MISMATCH</span>']);
    const laws = r.derived_laws.map((l) => [l.name, "", l.pass ? '<span class="ok">pass</span>' : '<span class="bad">FAIL</span>']);
    const verdict = r.overall ? '<b class="ok">PASS</b>' : '<b class="bad">FAIL</b>';
    $("report").innerHTML = `<p>determinant <b>${r.det_value}</b> ${verdict}</p>` + table(["check", "value", "status"], paths.concat(laws));
  } catch (e) {
    $("report").innerHTML = "";
    showError(e);
  }
}

function runTrace() {
  const order = orderOf($("matrix").value);
  if (Number.isInteger(order) && order >= 1 && order <= 3) {
    $("index").max = order;
    if (+$("index").value > order) $("index").value = order;
  }
  $("index-label").textContent = $("index").value;
  clearError();
  try {
    const t = JSON.parse(expansion_trace($("matrix").value, $("axis").value, +$("index").value));
    const rows = t.terms.map((x) => [`(${x.at.join(",")})`, x.entry, x.sign, x.minor, x.contribution]);
    $("trace").innerHTML =
      `<p>expansion along ${t.axis} ${t.index}, total <b>${t.total}</b></p>` +
      table(["position", "entry", "sign", "minor", "contribution"], rows);
  } catch (e) {
    $("trace").innerHTML = "";
    showError(e);
  }
}

function runGenerate() {
  clearError();
  try {
    $("matrix").value = random_matrix(+$("gen-order").value, $("gen-seed").value, +$("gen-range").value);
    refresh();
  } catch (e) {
    showError(e);
  }
}

function refresh() {
  runTrace();
  runVerify();
}

await init();
$("verify").addEventListener("click", runVerify);
$("gen").addEventListener("click", runGenerate);
$("axis").addEventListener("change", runTrace);
$("index").addEventListener("input", runTrace);
$("matrix").addEventListener("input", runTrace);
refresh();
