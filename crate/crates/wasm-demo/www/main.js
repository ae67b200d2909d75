import init, { family, riordan, umbra } from "./pkg/umbral_wasm_demo.js";

const $ = (id) => document.getElementById(id);

// "p/q" -> float, only for plotting
function toFloat(text) {
  const [p, q] = text.split("/");
  return q === undefined ? Number(p) : Number(p) / Number(q);
}

function evalPoly(coeffs, x) {
  let acc = 0;
  for (let i = coeffs.length - 1; i >= 0; i--) acc = acc * x + coeffs[i];
  return acc;
}

function run(errorBox, fn) {
  try {
    errorBox.textContent = "";
    return JSON.parse(fn());
  } catch (e) {
    errorBox.textContent = e.message ?? String(e);
    return null;
  }
}

function fillTable(table, header, rows, zeroFaded) {
  table.replaceChildren();
  const head = table.insertRow();
  for (const h of header) {
    const th = document.createElement("th");
    th.textContent = h;
    head.appendChild(th);
  }
  for (const row of rows) {
    const tr = table.insertRow();
    for (const cell of row) {
      const td = tr.insertCell();
      td.textContent = cell;
      if (zeroFaded && cell === "0") td.className = "zero";
    }
  }
}

const COLORS = ["#1b6ca8", "#d1495b", "#edae49", "#00798c", "#66a182", "#8d6a9f", "#2e4057", "#c17c74"];

function plot(canvas, polys, xmin, xmax) {
  const ctx = canvas.getContext("2d");
  const { width, height } = canvas;
  ctx.clearRect(0, 0, width, height);
  if (!(xmax > xmin)) return;
  const steps = 400;
  const curves = polys.map((coeffs) => {
    const c = coeffs.map(toFloat);
    return Array.from({ length: steps + 1 }, (_, i) => {
      const x = xmin + ((xmax - xmin) * i) / steps;
      return [x, evalPoly(c, x)];
    });
  });
  const ys = curves.flat().map(([, y]) => y).filter(Number.isFinite);
  let ymin = Math.min(...ys, 0);
  let ymax = Math.max(...ys, 0);
  if (ymax - ymin < 1e-9) { ymin -= 1; ymax += 1; }
  const pad = 24;
  const sx = (x) => pad + ((x - xmin) / (xmax - xmin)) * (width - 2 * pad);
  const sy = (y) => height - pad - ((y - ymin) / (ymax - ymin)) * (height - 2 * pad);

  ctx.strokeStyle = "#bbb";
  ctx.lineWidth = 1;
  ctx.beginPath();
  ctx.moveTo(pad, sy(0)); ctx.lineTo(width - pad, sy(0));
  if (xmin <= 0 && xmax >= 0) { ctx.moveTo(sx(0), pad); ctx.lineTo(sx(0), height - pad); }
  ctx.stroke();
  ctx.fillStyle = "#777";
  ctx.font = "11px system-ui";
  ctx.fillText(ymax.toPrecision(3), 2, pad - 6);
  ctx.fillText(ymin.toPrecision(3), 2, height - 6);

  curves.forEach((pts, n) => {
    ctx.strokeStyle = COLORS[n % COLORS.length];
    ctx.lineWidth = 1.5;
    ctx.beginPath();
    pts.forEach(([x, y], i) => (i ? ctx.lineTo(sx(x), sy(y)) : ctx.moveTo(sx(x), sy(y))));
    ctx.stroke();
  });
}

function updateFamily() {
  const result = run($("fam-error"), () =>
    family($("fam-kind").value, Number($("fam-nmax").value), $("fam-lambda").value, $("fam-b").value, $("fam-c").value),
  );
  const list = $("fam-list");
  list.replaceChildren();
  if (!result) return;
  result.display.forEach((text, n) => {
    const li = document.createElement("li");
    li.textContent = text;
    li.style.color = COLORS[n % COLORS.length];
    list.appendChild(li);
  });
  plot($("fam-plot"), result.polynomials, Number($("fam-xmin").value), Number($("fam-xmax").value));
}

function updateRiordan() {
  const result = run($("rio-error"), () =>
    riordan($("rio-gamma").value, $("rio-alpha").value, Number($("rio-order").value), $("rio-flavor").value, $("rio-inverse").checked),
  );
  if (!result) return $("rio-table").replaceChildren();
  const header = ["n \\ k", ...result.entries.map((_, k) => String(k))];
  fillTable($("rio-table"), header, result.entries.map((row, n) => [String(n), ...row]), true);
}

function updateUmbra() {
  const result = run($("umb-error"), () => umbra($("umb-expr").value, Number($("umb-order").value)));
  if (!result) return $("umb-table").replaceChildren();
  const rows = result.moments.map((m, n) => [String(n), m, result.gf[n]]);
  fillTable($("umb-table"), ["n", `moment of ${result.expression}`, "gf coefficient"], rows, false);
}

await init();
for (const id of ["fam-kind", "fam-nmax", "fam-lambda", "fam-b", "fam-c", "fam-xmin", "fam-xmax"]) $(id).addEventListener("input", updateFamily);
for (const id of ["rio-gamma", "rio-alpha", "rio-order", "rio-flavor", "rio-inverse"]) $(id).addEventListener("input", updateRiordan);
for (const id of ["umb-expr", "umb-order"]) $(id).addEventListener("input", updateUmbra);
updateFamily();
updateRiordan();
updateUmbra();
