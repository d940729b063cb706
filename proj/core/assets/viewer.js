// Default viewer embedded into woven HTML. A separately built viewer can be
// substituted at configure time with -DONTOWEAVE_VIEWER_JS=<path>.
(function () {
  "use strict";

  var manifestNode = document.getElementById("ow-manifest");
  var manifest = manifestNode ? JSON.parse(manifestNode.textContent) : { entities: [], direction: "ltr" };

  var state = {
    hiddenChunks: {},
    globalHidden: document.body.getAttribute("data-hide-source") === "true",
    activeLocale: ""
  };

  function chunkVisible(id) {
    return !(state.globalHidden || state.hiddenChunks[id]);
  }

  function render() {
    var blocks = document.querySelectorAll(".source[data-chunk]");
    for (var i = 0; i < blocks.length; i++) {
      var id = blocks[i].getAttribute("data-chunk");
      var visible = chunkVisible(id);
      blocks[i].classList.toggle("collapsed", !visible);
      var button = blocks[i].querySelector(".ow-toggle");
      if (button) button.textContent = visible ? "Hide source" : "Show source";
    }
    var all = document.getElementById("ow-toggle-all");
    if (all) all.textContent = state.globalHidden ? "Show all source" : "Hide all source";
  }

  function initialHidden() {
    var blocks = document.querySelectorAll(".source.collapsed[data-chunk]");
    if (state.globalHidden) return;
    for (var i = 0; i < blocks.length; i++) {
      state.hiddenChunks[blocks[i].getAttribute("data-chunk")] = true;
    }
  }

  function toggleChunk(id) {
    if (state.hiddenChunks[id]) delete state.hiddenChunks[id];
    else state.hiddenChunks[id] = true;
    render();
  }

  function displayText(entity, locale) {
    if (locale && entity.labels && entity.labels[locale]) return entity.labels[locale];
    return entity.name;
  }

  function setLocale(locale) {
    state.activeLocale = locale;
    var byAnchor = {};
    for (var i = 0; i < manifest.entities.length; i++) {
      byAnchor[manifest.entities[i].anchor] = manifest.entities[i];
    }
    var nodes = document.querySelectorAll("[data-entity]");
    for (var j = 0; j < nodes.length; j++) {
      var entity = byAnchor[nodes[j].getAttribute("data-entity")];
      if (entity) nodes[j].textContent = displayText(entity, locale);
    }
  }

  function buildLocalePicker() {
    var picker = document.getElementById("ow-locale");
    if (!picker) return;
    var seen = {};
    for (var i = 0; i < manifest.entities.length; i++) {
      var labels = manifest.entities[i].labels || {};
      for (var tag in labels) {
        if (tag && !seen[tag]) {
          seen[tag] = true;
          var option = document.createElement("option");
          option.value = tag;
          option.textContent = tag;
          picker.appendChild(option);
        }
      }
    }
    picker.addEventListener("change", function () { setLocale(picker.value); });
  }

  function activeTocEntry(entries, offset) {
    var current = entries[0];
    for (var i = 0; i < entries.length; i++) {
      if (entries[i].offset <= offset) current = entries[i];
      else break;
    }
    return current;
  }

  function trackToc() {
    var links = document.querySelectorAll("#ow-toc a[href^='#']");
    if (!links.length) return;
    function update() {
      var entries = [];
      for (var i = 0; i < links.length; i++) {
        var target = document.getElementById(links[i].getAttribute("href").slice(1));
        if (target) entries.push({ link: links[i], offset: target.offsetTop });
      }
      if (!entries.length) return;
      var active = activeTocEntry(entries, window.scrollY + 8);
      for (var j = 0; j < entries.length; j++) {
        entries[j].link.classList.toggle("active", entries[j] === active);
      }
    }
    window.addEventListener("scroll", update, { passive: true });
    update();
  }

  initialHidden();
  document.addEventListener("click", function (event) {
    var target = event.target;
    if (target.classList.contains("ow-toggle")) {
      toggleChunk(target.getAttribute("data-chunk"));
    } else if (target.id === "ow-toggle-all") {
      state.globalHidden = !state.globalHidden;
      render();
    }
  });
  buildLocalePicker();
  trackToc();
  render();
})();
