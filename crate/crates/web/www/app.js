import init, { constructArray, verifyArray, tripleCover } from "./pkg/heffter_web.js";

const $ = (id) => document.getElementById(id);

function tag(label, on) {
  return `<span class="tag ${on ? "yes" : "no"}">${label}: ${on ? "yes" : "no"}</span>`;
}

function tileHue(i) {
  return (i * 137.508) % 360;
}

function renderGrid(view, shade) {
  const owner = Array.from({ length: view.m }, () => new Array(view.n).fill(-1));
  view.tiles.forEach((t, k) => {
    for (let i = t.row; i < t.row + t.rows; i++) {
      for (let j = t.col; j < t.col + t.cols; j++) owner[i][j] = k;
    }
  });
  const colSums = new Array(view.n).fill(0);
  let html = '<table class="grid">';
  view.rows.forEach((row, i) => {
    html += "<tr>";
    let rowSum = 0;
    row.forEach((v, j) => {
      rowSum += v;
      colSums[j] += v;
      const k = owner[i][j];
      const t = view.tiles[k];
      const bg = shade && k >= 0 ? `hsl(${tileHue(k)} 60% ${v < 0 ? 80 : 90}%)` : "";
      const title = t ? `${t.name} (${t.construction}) shift ${t.shift}${t.transposed ? ", transposed" : ""}` : "";
      html += `<td class="${v < 0 ? "neg" : ""}" style="background:${bg}" title="${title}">${v}</td>`;
    });
    html += `<td class="sum">${rowSum}</td></tr>`;
  });
  html += "<tr>" + colSums.map((s) => `<td class="sum">${s}</td>`).join("") + "<td></td></tr>";
  return html + "</table>";
}

function build() {
  const m = Number($("m").value);
  const n = Number($("n").value);
  try {
    const view = JSON.parse(constructArray(m, n));
    $("build-info").innerHTML =
      `<p>${view.construction}, ${view.case}${view.transposed ? ", built transposed" : ""}; ` +
      `${view.tiles.length} tiles; modulus ${view.modulus}</p>` +
      tag("Heffter", view.modular) + tag("integer", view.integer) + tag("shiftable", view.shiftable);
    $("build-out").innerHTML = renderGrid(view, $("shade").checked);
  } catch (e) {
    $("build-info").innerHTML = `<p class="err">${e}</p>`;
    $("build-out").innerHTML = "";
  }
}

function check() {
  try {
    const r = JSON.parse(verifyArray($("grid").value));
    let html = `<p>${r.m} x ${r.n}, modulus ${r.modulus}</p>` +
      tag("Heffter", r.modular) + tag("integer", r.integer) + tag("shiftable", r.shiftable);
    html += `<p>row sums: ${r.row_sums.join(", ")}<br>column sums: ${r.col_sums.join(", ")}</p>`;
    if (r.failures.length) {
      html += "<pre>" + r.failures.join("\n") + (r.more_failures ? `\n... ${r.more_failures} more` : "") + "</pre>";
    }
    $("check-out").innerHTML = html;
  } catch (e) {
    $("check-out").innerHTML = `<p class="err">${e}</p>`;
  }
}

function cover() {
  const n = Number($("tn").value);
  try {
    const triples = JSON.parse(tripleCover(n, $("wrap").checked));
    if (triples === null) {
      $("cover-out").innerHTML = `<p>No partition of 1..${3 * n} exists.</p>`;
      return;
    }
    const lines = triples.map((t) =>
      t.mode === "sum" ? `${t.a} + ${t.b} = ${t.c}` : `${t.a} + ${t.b} + ${t.c} = ${6 * n + 1}`);
    $("cover-out").innerHTML = "<pre>" + lines.join("\n") + "</pre>";
  } catch (e) {
    $("cover-out").innerHTML = `<p class="err">${e}</p>`;
  }
}

await init();
$("build").addEventListener("click", build);
$("shade").addEventListener("change", build);
$("check").addEventListener("click", check);
$("cover").addEventListener("click", cover);
build();
