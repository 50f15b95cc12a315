using System;

namespace Shapes.Geometry
{
    public interface [[c:IDrawable|IDrawable]]
    {
        void [[m:IDrawable.Draw|Draw]]();
    }

    public struct [[c:Point|Point]]
    {
        public double [[f:Point.X|X]];
        public double [[f:Point.Y|Y]];

        public [[m:Point.ctor|Point]](double [[v:Point.ctor.x|x]], double [[v:Point.ctor.y|y]])
        {
            [[r:Point.X|X]] = [[r:Point.ctor.x|x]];
            [[r:Point.Y|Y]] = [[r:Point.ctor.y|y]];
        }
    }

    public abstract class [[c:Shape|Shape]] : [[r:IDrawable|IDrawable]]
    {
        protected double [[f:Shape.scale|scale]] = 1.0;
        protected [[r:Point|Point]] [[f:Shape.origin|origin]];

        public class [[c:Shape.Metrics|Metrics]]
        {
            public double [[f:Shape.Metrics.area|area]], [[f:Shape.Metrics.perimeter|perimeter]];

            public string [[m:Shape.Metrics.Report|Report]]()
            {
                return [[r:Shape.Metrics.area|area]] + " / " + [[r:Shape.Metrics.perimeter|perimeter]];
            }
        }

        public abstract [[r:Shape.Metrics|Metrics]] [[m:Shape.Measure|Measure]]();

        public void [[m:Shape.Draw|Draw]]()
        {
            Console.WriteLine([[r:Shape.Measure|Measure]]().Report());
        }

        ~[[m:Shape.dtor|Shape]]()
        {
        }
    }
}
