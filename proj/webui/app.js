"use strict";

const DEBOUNCE_MS = 150;

const editor = document.getElementById("editor");
const menu = document.getElementById("menu");
const statusEl = document.getElementById("status");
const banner = document.getElementById("banner");
const logged = document.getElementById("logged");
const langSel = document.getElementById("lang");
const devInput = document.getElementById("dev");

devInput.value = localStorage.getItem("developer_id") || "dev-" + Math.random().toString(36).slice(2, 8);
devInput.addEventListener("change", () => localStorage.setItem("developer_id", devInput.value));
const sessionId = "s-" + Date.now().toString(36);

// Only the newest sequence number may render.
let seq = 0;
let timer = null;
let current = null; // {response, selected, cursor, buffer}
const retries = [];

function showBanner(msg) {
  banner.textContent = msg;
  banner.style.display = msg ? "block" : "none";
}

async function post(path, body) {
  const r = await fetch(path, {
    method: "POST",
    headers: {"Content-Type": "application/json"},
    body: JSON.stringify(body),
  });
  const j = await r.json().catch(() => ({}));
  if (!r.ok) throw Object.assign(new Error(j.error || r.statusText), {status: r.status});
  return j;
}

async function refreshHealth() {
  try {
    const h = await (await fetch("/v1/health")).json();
    const name = h.checkpoint ? h.checkpoint.split("/").pop() : "none";
    statusEl.dataset.model = name + " gen " + h.generation;
    statusEl.textContent = "model " + statusEl.dataset.model;
    showBanner(h.model_loaded ? "" : "no model loaded");
  } catch (e) {
    showBanner("service unreachable");
  }
}

// After an identifier character or an access/call operator.
function atIdentifierBoundary(text) {
  return /[A-Za-z0-9_$.>(]$/.test(text);
}

function schedule() {
  hide();
  clearTimeout(timer);
  const before = editor.value.slice(0, editor.selectionStart);
  if (!before.trim() || !atIdentifierBoundary(before)) return;
  timer = setTimeout(request, DEBOUNCE_MS);
}

async function request() {
  const mine = ++seq;
  const cursor = editor.selectionStart;
  const buffer = editor.value;
  try {
    const resp = await post("/v1/complete", {
      language: langSel.value,
      before_cursor: buffer.slice(0, cursor),
      session_id: sessionId,
      developer_id: devInput.value,
    });
    showBanner("");
    if (mine !== seq || editor.value !== buffer || editor.selectionStart !== cursor) return;
    statusEl.textContent = `model ${statusEl.dataset.model || "?"}, ${resp.latency_ms.toFixed(1)} ms, ${resp.candidate_count} candidates`;
    if (!resp.suggestions.length) return;
    current = {response: resp, selected: 0, cursor, buffer};
    render();
  } catch (e) {
    if (mine !== seq) return;
    if (e.status === 400) return; // nothing completable here
    showBanner(e.status ? `completion failed: ${e.message}` : "service unreachable");
  }
}

function caretPosition() {
  const mirror = document.createElement("div");
  const style = getComputedStyle(editor);
  for (const p of ["font", "padding", "border", "boxSizing", "whiteSpace", "width", "lineHeight", "tabSize"]) {
    mirror.style[p] = style[p];
  }
  mirror.style.position = "absolute";
  mirror.style.visibility = "hidden";
  mirror.style.whiteSpace = "pre-wrap";
  mirror.textContent = editor.value.slice(0, editor.selectionStart);
  const mark = document.createElement("span");
  mark.textContent = "​";
  mirror.appendChild(mark);
  document.body.appendChild(mirror);
  const pos = {left: mark.offsetLeft, top: mark.offsetTop + mark.offsetHeight - editor.scrollTop};
  document.body.removeChild(mirror);
  return pos;
}

function render() {
  menu.innerHTML = "";
  current.response.suggestions.forEach((s, i) => {
    const row = document.createElement("div");
    if (i === current.selected) row.className = "sel";
    const tok = document.createElement("span");
    tok.textContent = s.token;
    const score = document.createElement("span");
    score.className = "score";
    score.textContent = s.score.toFixed(3);
    row.append(tok, score);
    row.addEventListener("mousedown", (ev) => {
      ev.preventDefault();
      current.selected = i;
      accept();
    });
    menu.appendChild(row);
  });
  const pos = caretPosition();
  menu.style.left = pos.left + "px";
  menu.style.top = pos.top + "px";
  menu.style.display = "block";
}

function hide() {
  current = null;
  menu.style.display = "none";
}

async function accept() {
  if (!current) return;
  const {response, selected, cursor} = current;
  const token = response.suggestions[selected].token;
  hide(); // closes the dropdown, so a second keypress cannot accept twice
  const start = cursor - response.prefix.length;
  editor.setRangeText(token, start, cursor, "end");
  const notice = {
    session_id: sessionId,
    request_id: response.request_id,
    context_hash: response.context_hash,
    accepted: token,
    shown: response.suggestions.map((s) => s.token),
    timestamp: new Date().toISOString(),
  };
  sendAccept(notice);
}

async function sendAccept(notice) {
  try {
    const ev = await post("/v1/accept", notice);
    logged.textContent = "logged " + ev.event.id;
  } catch (e) {
    if (e.status === 409) return; // already logged by an earlier retry
    if (e.status && e.status !== 503) {
      showBanner(`accept rejected: ${e.message}`);
      return;
    }
    showBanner("accept not logged yet, retrying");
    retries.push(notice);
  }
}

setInterval(() => {
  const pending = retries.splice(0);
  pending.forEach(sendAccept);
  refreshHealth();
}, 5000);

editor.addEventListener("keydown", (ev) => {
  if (!current) return;
  const n = current.response.suggestions.length;
  if (ev.key === "ArrowDown") current.selected = (current.selected + 1) % n;
  else if (ev.key === "ArrowUp") current.selected = (current.selected + n - 1) % n;
  else if (ev.key === "Enter" || ev.key === "Tab") accept();
  else if (ev.key === "Escape") hide();
  else return;
  ev.preventDefault();
  if (current) render();
});
editor.addEventListener("input", schedule);
editor.addEventListener("click", hide);
langSel.addEventListener("change", hide);

refreshHealth();
