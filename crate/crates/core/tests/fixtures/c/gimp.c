#include "gimpitem.h"

/* Item path lookup. */
static const char *gimpItemGetPath (GimpItem *item)
{
  return item->path;
}

void gimpItemSetPath(GimpItem *item, const char *path) {
  item->path = path;
}
